//! Benchmark fixtures for the isolation game solver.

use isogame_core::graph::{cycle, family_f, ghat, path, Graph};

/// Named graphs of increasing difficulty for solver timings.
pub fn fixtures() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [12, 16, 20] {
        out.push((format!("cycle:{n}"), cycle(n).expect("valid order")));
        out.push((format!("path:{n}"), path(n).expect("valid order")));
    }
    out.push(("f:6".into(), family_f(6, None).expect("hardcoded")));
    out.push(("ghat:path:2".into(), ghat(&path(2).expect("valid order")).expect("fits").graph));
    out
}
