//! Numerical kernels shared by the distribution, estimation and
//! goodness-of-fit layers. Everything here is a pure function.

mod kolmogorov;
mod normal;
mod quadrature;
mod roots;
mod stable;

pub use kolmogorov::kolmogorov_sf;
pub use normal::std_normal_quantile;
pub use quadrature::{integrate, integrate_halfline, integrate_halfline_scaled, QuadratureResult};
pub use roots::{expand_bracket, find_root, find_root_with, Bracket, RootOptions};
pub use stable::{expm1_stable, log1p_exp_neg};

pub(crate) use stable::ln_one_minus_exp_neg;
