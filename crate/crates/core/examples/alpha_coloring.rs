//! Color an FGLSS graph on an extended instance by extension index.

use hkcolor::fglss::{alpha_coloring, verify_coloring, FglssGraph};
use hkcolor::label_cover::{extend, gen_planted, GenParams};
use hkcolor::pcp::VerifierConfig;

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
    for t in 1..=4 {
        let g = FglssGraph::build_sampled(&extend(&inst, t)?, &VerifierConfig::new(2, 8), 32)?;
        let col = alpha_coloring(&g, &lab)?;
        let classes = col.classes();
        let sizes: Vec<usize> = classes.values().map(Vec::len).collect();
        println!(
            "t={t}: {} colored, {} removed, palette {} of {}, class sizes {sizes:?}, violations {}",
            col.colors.len(),
            col.removed.len(),
            col.palette_size(),
            1 << t,
            verify_coloring(&g, &col).len()
        );
    }
    Ok(())
}
