//! The MEP vector labels in R^3: faithfulness and the quantum side of the
//! pseudocontext {5,11,17} ~ {1,7,13}.

use contextuality::geometry::{
    build_mep_for, eigen_sym3, mep_alpha, pseudocontext_eigenvalue_closed_form, verify_for, Mat3, DEFAULT_EIGEN_TOL,
    DEFAULT_TOL_MARGIN, DEFAULT_TOL_ZERO,
};
use contextuality::hypergraph::mep;

fn main() {
    let f = build_mep_for();
    println!("alpha = {:.10} rad", mep_alpha());
    print!("{}", f.to_text());

    let r = verify_for(&mep(), &f, DEFAULT_TOL_ZERO, DEFAULT_TOL_MARGIN).unwrap();
    println!(
        "\nfaithful: {} ({} pairs, worst orthogonality {:.1e}, smallest non-orthogonal overlap {:.4})",
        r.faithful, r.pairs_checked, r.max_adjacent_overlap, r.min_margin
    );

    let sum = |xs: [u32; 3]| xs.iter().fold(Mat3::ZERO, |m, &x| m + f.projector(&x.into()).unwrap());
    let (a, b) = (sum([5, 11, 17]), sum([1, 7, 13]));
    println!("\nE5+E11+E17 - (E1+E7+E13): max |entry| = {:.1e}", a.max_abs_diff(&b));
    let spec = eigen_sym3(&a, DEFAULT_EIGEN_TOL).unwrap();
    println!("spectrum of E5+E11+E17: {:?}", spec.values);
    println!(
        "closed form of the degenerate eigenvalue: {:.10}",
        pseudocontext_eigenvalue_closed_form()
    );
}
