//! The Hadamard predicate on `K = 2^r − 1` variables.
//!
//! Coordinates are indexed by nonempty subsets of the `r` generators. Position
//! `p` (0-based) carries the subset whose characteristic vector is the binary
//! encoding of `p + 1`, so the singleton of generator `s` (0-based) sits at
//! position `2^s − 1`. An input is accepted iff every coordinate equals the
//! product of its generators' singleton coordinates; the accepted inputs are
//! exactly the `2^r` Hadamard codewords, a group under coordinatewise product.

use std::ops::Mul;

use rand::Rng;

use crate::error::{input, Result};
use crate::sign::Sign;

/// Largest supported generator count. Answer tuples are packed into `u32`.
pub const MAX_GENERATORS: u32 = 5;

/// One accepting assignment of the predicate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: Vec<Sign>,
}

impl Codeword {
    pub fn bits(&self) -> &[Sign] {
        &self.bits
    }

    pub fn get(&self, pos: usize) -> Sign {
        self.bits[pos]
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Packed form: bit `p` set iff position `p` is −1.
    pub fn pattern(&self) -> u32 {
        pattern_of(&self.bits)
    }
}

impl Mul for &Codeword {
    type Output = Codeword;

    fn mul(self, rhs: &Codeword) -> Codeword {
        Codeword {
            bits: self.bits.iter().zip(&rhs.bits).map(|(&a, &b)| a * b).collect(),
        }
    }
}

pub(crate) fn pattern_of(bits: &[Sign]) -> u32 {
    bits.iter()
        .enumerate()
        .fold(0, |acc, (p, s)| if s.is_minus() { acc | (1 << p) } else { acc })
}

#[derive(Clone, Debug)]
pub struct HadamardPredicate {
    generators: u32,
    arity: usize,
    codewords: Vec<Codeword>,
    patterns: Vec<u32>,
    // [position][0 = +1, 1 = −1] -> indices of codewords with that value
    fixed: Vec<[Vec<usize>; 2]>,
}

impl HadamardPredicate {
    pub fn new(generators: u32) -> Result<Self> {
        if generators == 0 || generators > MAX_GENERATORS {
            return input(format!(
                "generator count r must be in 1..={MAX_GENERATORS}, got {generators}"
            ));
        }
        let arity = (1usize << generators) - 1;

        // Assignments to the singletons are enumerated in binary order with
        // generator 1 as the most significant bit.
        let codewords: Vec<Codeword> = (0..1u32 << generators)
            .map(|a| {
                let g = reverse_bits(a, generators);
                Codeword {
                    bits: (0..arity)
                        .map(|p| Sign::from_minus((g & (p as u32 + 1)).count_ones() % 2 == 1))
                        .collect(),
                }
            })
            .collect();
        let patterns = codewords.iter().map(Codeword::pattern).collect();

        let mut fixed = vec![[Vec::new(), Vec::new()]; arity];
        for (idx, cw) in codewords.iter().enumerate() {
            for (p, s) in cw.bits.iter().enumerate() {
                fixed[p][s.is_minus() as usize].push(idx);
            }
        }

        Ok(Self {
            generators,
            arity,
            codewords,
            patterns,
            fixed,
        })
    }

    /// The generator count `r`.
    pub fn generators(&self) -> u32 {
        self.generators
    }

    /// The arity `K = 2^r − 1`.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of accepting assignments, `K + 1`.
    pub fn codeword_count(&self) -> usize {
        self.codewords.len()
    }

    /// Subset of generators carried by position `pos`, as a bitmask
    /// (bit `s` set iff generator `s + 1` belongs to it).
    pub fn subset_of(&self, pos: usize) -> u32 {
        assert!(pos < self.arity, "position {pos} out of range");
        pos as u32 + 1
    }

    /// Position of the singleton `{s}` for the 0-based generator `s`.
    pub fn singleton_position(&self, s: u32) -> usize {
        assert!(s < self.generators, "generator {s} out of range");
        (1usize << s) - 1
    }

    pub fn evaluate(&self, x: &[Sign]) -> Result<bool> {
        if x.len() != self.arity {
            return input(format!("predicate arity is {}, got {} values", self.arity, x.len()));
        }
        Ok(self.pattern_index(pattern_of(x)).is_some())
    }

    /// Accepting assignments in enumeration order; index 0 is all-ones.
    pub fn accepting_set(&self) -> &[Codeword] {
        &self.codewords
    }

    pub fn codeword(&self, index: usize) -> &Codeword {
        &self.codewords[index]
    }

    /// Index of `x` in [`accepting_set`](Self::accepting_set), if accepted.
    pub fn codeword_index(&self, x: &[Sign]) -> Option<usize> {
        if x.len() != self.arity {
            return None;
        }
        self.pattern_index(pattern_of(x))
    }

    /// Same as [`codeword_index`](Self::codeword_index) on a packed tuple.
    #[inline]
    pub fn pattern_index(&self, pattern: u32) -> Option<usize> {
        // The singleton positions determine the only candidate codeword.
        let g = (0..self.generators).fold(0u32, |g, s| g | (((pattern >> ((1u32 << s) - 1)) & 1) << s));
        let idx = reverse_bits(g, self.generators) as usize;
        (self.patterns[idx] == pattern).then_some(idx)
    }

    /// Indices of the `(K + 1) / 2` codewords whose position `pos` equals `bit`.
    pub fn candidates(&self, pos: usize, bit: Sign) -> &[usize] {
        &self.fixed[pos][bit.is_minus() as usize]
    }

    /// Draws a codeword uniformly among those with `bit` at `pos`; returns its index.
    pub fn sample_fixed_coord<R: Rng + ?Sized>(&self, pos: usize, bit: Sign, rng: &mut R) -> usize {
        let cands = self.candidates(pos, bit);
        cands[rng.random_range(0..cands.len())]
    }

    /// Index of the coordinatewise product of two codewords.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        a ^ b
    }
}

fn reverse_bits(x: u32, width: u32) -> u32 {
    x.reverse_bits() >> (32 - width)
}
