use modsums::{chi_hk, ModularFrame, singularity_data};
use num_complex::Complex64;
use specfun::f_nu_closed;
use thetalab::eichler::{eichler_e, erf_term_closed_form, EichlerKind};
use thetalab::eval::*;

fn i_u() -> Complex64 { Complex64::new(0.0, 1.0) }
fn c64(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

fn main() {
    let pi = std::f64::consts::PI;
    let frame = ModularFrame::new(0, 1).unwrap();
    let big_z = c64(0.0375, 0.02);
    let tol = 1e-12;
    let k = 1.0f64;
    let k_cap = 1.0f64;
    let g = 1.0f64;
    let w_cap = 6.0 * big_z / g;
    let tau_star = c64(0.0, 0.0) + i_u() / (k_cap * w_cap);
    let beta = c64(0.5, 0.0); // z = 0: β = 1/2 - h/k = 1/2
    let z_star = beta / (i_u() * w_cap) - c64(1.0 / 6.0, 0.0);
    let alpha = 0.5f64;
    let filter = BadMFilter::new(&frame);
    let chi = chi_hk(&frame);
    let iw = i_u() * w_cap;
    let tau_p = c64(frame.neg_inv as f64, 0.0) + i_u() / big_z;
    let cstar_p = eval_cstar(&c64(0.0, 0.0), tau_p, tol).unwrap();
    let eta_p = eval_eta(tau_p, tol).unwrap();
    let fk = f_nu_closed(k, c64(0.0, 0.0), big_z).unwrap();
    let fk2 = f_nu_closed(k / 2.0, c64(0.0, 0.0), -big_z).unwrap();

    // lem:calv pieces at z=0 (the exact transformation, all terms)
    let psi_star = eval_psi_restricted(&z_star, tau_star, tol, filter).unwrap();
    let ee = eichler_e(0.0, z_star, tau_star, MRestriction::Generic(filter), tol, 32, EichlerKind::Auto).unwrap();
    let first = (-pi * i_u() * 0.0 - 0.0 - pi * alpha * alpha / (k_cap * w_cap) + pi * i_u() / 6.0).exp() * fk2 * psi_star;
    let second = i_u() * (pi * i_u() / 6.0).exp() * fk * ee;
    let mut erf_sum = c64(0.0, 0.0);
    for j in filter.bad_indices() {
        let m = j as f64 + 0.5;
        let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let erf_val = specfun::erf_complex(i_u() * c64(alpha - m, 0.0) * (pi / (k_cap * w_cap)).sqrt());
        let expo = (0.0 * pi - pi * (m - alpha) * (m - alpha) / (k_cap * w_cap)
            + pi * i_u() * (0.0 + 0.0 - (m - alpha) / (3.0 * k_cap))).exp();
        erf_sum += sign * fk2 * erf_val * expo;
    }
    let third = i_u() * erf_sum;
    let common = i_u() * chi * iw.powf(-0.5) * cstar_p / eta_p;
    println!("lemma total (true V1(0;iZ)): {}", common * (first + second + third));
    println!("  first (Psi*): {}", common * first);
    println!("  second (E):   {}", common * second);
    println!("  third (erf):  {}", common * third);
    let direct = asymptotics::taylor::v1_jet_derivative(&frame, big_z, 0, tol).unwrap();
    println!("direct V1: {direct}");
    let main = asymptotics::taylor::taylor_main_v1(&frame, big_z, 0, 1e-11).unwrap();
    println!("taylor_main_v1: {}", main.value);
    // full E vs restricted+erf closed forms for sanity
    let full_e = eichler_e(0.0, z_star, tau_star, MRestriction::All, tol, 32, EichlerKind::Auto).unwrap();
    let bad_sum: Complex64 = filter.bad_indices().into_iter().map(|j| erf_term_closed_form(0.0, z_star, tau_star, j)).sum();
    println!("E full {} = restr {} + erf {}", full_e, ee, bad_sum);
    let s = singularity_data(1, 0, 0);
    println!("eps: {} {}", s.eps_plus, s.eps_minus);
}
