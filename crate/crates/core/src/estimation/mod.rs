//! Maximum-likelihood estimation: log-likelihoods, the analytic score and
//! observed information of OGE-LFR, a Nelder-Mead minimiser, multistart
//! fitting for every model, and Wald confidence intervals.

mod fit;
mod intervals;
mod likelihood;
mod nelder_mead;

pub use fit::{fit_mle, FitOptions, FitReport, HessianMethod, FIT_SCHEMA_VERSION};
pub use intervals::{confidence_intervals, invert_information, ConfidenceInterval, InformationInverse};
pub use likelihood::{
    finite_difference_hessian, log_likelihood, log_likelihood_model, observed_information, observed_information_fd,
    profile_beta, score, AuxFunctions,
};
pub use nelder_mead::{minimize, NelderMeadOptions, NelderMeadResult};
