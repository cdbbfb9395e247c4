//! A folded random proof is accepted with probability about (K+1)/2^K.

use hkcolor::label_cover::{gen_planted, GenParams};
use hkcolor::pcp::{accept_prob_mc, Proof, VerifierConfig};

fn main() -> hkcolor::Result<()> {
    let (inst, _) = gen_planted(
        GenParams {
            u_count: 2,
            v_count: 3,
            left_labels: 2,
            d: 2,
            edge_count: 4,
        },
        7,
    )?;
    for r in 2..=4 {
        let k = (1u32 << r) - 1;
        let mc = accept_prob_mc(&inst, &VerifierConfig::new(r, 5), &Proof::random(11), 100_000)?;
        println!(
            "r = {r}: measured {:.5} ± {:.5}, (K+1)/2^K = {:.5}",
            mc.estimate,
            mc.stderr,
            (k + 1) as f64 / 2f64.powi(k as i32)
        );
    }
    Ok(())
}
