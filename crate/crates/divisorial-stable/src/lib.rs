//! Divisorial closures `v(a)`, simplicity, and stable nuclei.

pub mod divisorial;
pub mod lazy;
pub mod simple;
pub mod stable;

pub use divisorial::{
    divisorial_decomposition, is_cyclic, lin_monoid, v, v_checked, v_double_residual, v_lin, v_sandwich,
    v_strategies, v_via_units, CyclicityReport, VStrategy,
};
pub use lazy::{gv_upsets, star_w_upsets, UpSetsIdentity};
pub use simple::{is_simple, simplicity, SimplicityReport};
pub use stable::{
    gv_elements, is_stable, stability, stable_closure, stable_hypotheses, star_w, t_of, v_bar, w_of, GVSet,
    StabilityReport,
};
