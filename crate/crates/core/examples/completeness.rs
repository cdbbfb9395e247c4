//! Acceptance of the correct proof: Monte Carlo, closed form, and exact
//! enumeration at zero noise.

use hkcolor::label_cover::{gen_planted, GenParams};
use hkcolor::pcp::{
    accept_prob_exact_enum, accept_prob_exact_product, accept_prob_mc, Proof, VerifierConfig, DEFAULT_ENUM_CAP,
};
use hkcolor::weights;

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
    let proof = Proof::correct(lab.clone(), 0, 0)?;

    let exact = accept_prob_exact_enum(
        &inst,
        &VerifierConfig::new(2, 1).with_eta(0.0),
        &proof,
        DEFAULT_ENUM_CAP,
    )?;
    println!("η = 0: exact acceptance {}", weights::format(&exact.probability));

    for eta in [0.0, 1.0 / 18.0, 1.0 / 9.0, 0.25] {
        let cfg = VerifierConfig::new(2, 1).with_eta(eta);
        let mc = accept_prob_mc(&inst, &cfg, &proof, 200_000)?;
        let closed = accept_prob_exact_product(&inst, &cfg, &lab, 0)?;
        println!(
            "η = {eta:.4}: MC {:.5} ± {:.5}, closed form {closed:.5}, bound 1 - K²η = {:.4}",
            mc.estimate,
            mc.stderr,
            1.0 - 9.0 * eta
        );
    }
    Ok(())
}
