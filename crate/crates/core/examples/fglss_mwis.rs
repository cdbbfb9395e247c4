//! Build an FGLSS graph, solve MWIS exactly, and turn the set back into a
//! partial proof.

use hkcolor::fglss::{mwis_exact, FglssGraph, DEFAULT_MWIS_MAX_VERTICES};
use hkcolor::label_cover::{gen_planted, GenParams};
use hkcolor::pcp::{Proof, VerifierConfig};
use hkcolor::weights::format;

fn main() -> hkcolor::Result<()> {
    let (inst, lab) = gen_planted(
        GenParams {
            u_count: 2,
            v_count: 3,
            left_labels: 2,
            d: 2,
            edge_count: 4,
        },
        7,
    )?;
    let g = FglssGraph::build_sampled(&inst, &VerifierConfig::new(2, 3), 12)?;
    println!(
        "{} vertices, {} edges, total weight {}",
        g.vertex_count(),
        g.edge_count(),
        format(&g.total_weight())
    );

    let best = mwis_exact(&g, DEFAULT_MWIS_MAX_VERTICES)?;
    let strategy = g.strategy_from_is(&best.vertices)?;
    println!(
        "MWIS weight {} ({} vertices), merged strategy answers {} proof bits and accepts {}",
        format(&best.weight),
        best.vertices.len(),
        strategy.strategy.len(),
        format(&strategy.accept_weight)
    );
    println!(
        "colors needed: at least {}",
        format(&g.chromatic_lower_bound(DEFAULT_MWIS_MAX_VERTICES)?)
    );

    for (name, proof) in [("correct", Proof::correct(lab, 0, 0)?), ("random", Proof::random(2))] {
        println!(
            "{name} proof selects weight {}",
            format(&g.is_from_proof(&proof)?.weight)
        );
    }
    print!("{}", g.to_dimacs().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    Ok(())
}
