use asymptotics::durfee::{vl_series, MuRangeChoice};
use asymptotics::taylor::v1_jet_derivative;
use modsums::ModularFrame;
use num_complex::Complex64;
use thetalab::quad::adaptive;

fn main() {
    let n = 60usize;
    let frame = ModularFrame::new(0, 1).unwrap();
    // direct Farey-arc integral at k=1 of [∂⁰ V₁](iZ)·e^{2π(n+1/4)Z},
    // Z = 1/n - iΘ, Θ ∈ [-θ, θ], dΘ measure
    let theta = 1.0 / (n as f64).sqrt();
    let f = |th: f64| {
        let big_z = Complex64::new(1.0 / n as f64, -th);
        let v = v1_jet_derivative(&frame, big_z, 0, 1e-11).unwrap();
        let a = 2.0 * std::f64::consts::PI * (n as f64 + 0.25);
        v * (a * big_z).exp()
    };
    let arc = adaptive(&f, -theta, theta, 1e-6, 30);
    println!("direct k=1 arc integral: {} (conv {})", arc.value, arc.converged);
    let rep = vl_series(n, 0, 1, 1e-10, MuRangeChoice::Inclusive).unwrap();
    println!("series k=1 value:        {}", rep.value);
    println!("exact v0(60):            362989864");
    // Taylor main term vs direct at a small real-ish Z, for sign sanity
    for p in [1, 3] {
        let z = Complex64::new(0.3 / 2f64.powi(p), 0.02);
        let d = v1_jet_derivative(&frame, z, 0, 1e-12).unwrap();
        let m = asymptotics::taylor::taylor_main_v1(&frame, z, 0, 1e-11).unwrap();
        println!("Z={z}: direct {d}, main {}", m.value);
    }
}
