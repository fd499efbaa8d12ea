//! The Iwahori-Hecke algebra `H(n,q)` in the T-basis: `T_w T_s = T_{ws}` when
//! `ℓ(ws) > ℓ(w)`, and `(T_s)² = (q−1)T_s + q`.

mod center;
pub(crate) mod dense;
mod element;

pub use center::{
    class_sum, expand_in_center_basis, fh_product_q1, gamma_completed, geck_rouquier, gr_coordinates,
    gr_to_norm_coordinates, norm, norm_by_definition, norm_completed, norm_coordinates,
    product_gr_coordinates, verify_gr_characterization, COMPUTE_BOUND,
};
pub(crate) use center::{gamma_dense, norm_dense, product_gr_coordinates_dense};
pub use element::{GroupAlgebraElement, HeckeElement};
