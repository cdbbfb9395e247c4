//! Generate, extend and solve a small Label Cover instance.

use hkcolor::label_cover::{extend, gen_planted, gen_random, value_exact, GenParams, DEFAULT_VALUE_CAP};
use hkcolor::weights;

fn main() -> hkcolor::Result<()> {
    let params = GenParams {
        u_count: 2,
        v_count: 3,
        left_labels: 2,
        d: 2,
        edge_count: 4,
    };
    let (planted, labeling) = gen_planted(params, 7)?;
    println!("planted instance:\n{}", planted.to_json());
    println!("planted labeling: {}", labeling.to_json().replace('\n', " "));

    let random = gen_random(
        GenParams {
            edge_count: 6,
            ..params
        },
        2,
    )?;
    for (name, inst) in [("planted", &planted), ("random", &random)] {
        for t in 0..=2 {
            let ext = extend(inst, t)?;
            let v = value_exact(&ext, DEFAULT_VALUE_CAP)?;
            println!(
                "{name:>8} t={t}: L={:>2} R={:>2} value={}",
                ext.left_labels,
                ext.right_labels,
                weights::format(&v.value)
            );
        }
    }
    Ok(())
}
