//! Not-good query fraction against the number of extensions, for both
//! labeling scopes, with the measured union bound.

use hkcolor::fglss::{good_fraction_curve, LabelingScope, DEFAULT_GOOD_CAP};
use hkcolor::label_cover::{gen_planted, GenParams};
use hkcolor::pcp::VerifierConfig;

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
    let cfg = VerifierConfig::new(2, 9);
    for scope in [LabelingScope::All, LabelingScope::Satisfying] {
        println!("{scope:?}");
        println!("  2^t  not-good  stderr   p_hit   union bound");
        for p in good_fraction_curve(&inst, &cfg, &[1, 2, 3, 4, 5, 6], 400, scope, DEFAULT_GOOD_CAP)? {
            println!(
                "  {:>3}  {:>8.4}  {:.4}  {:.4}  {:.4e}",
                p.alphas, p.not_good_estimate, p.stderr, p.p_hit, p.union_bound
            );
        }
    }
    Ok(())
}
