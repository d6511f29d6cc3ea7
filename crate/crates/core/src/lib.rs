//! Exact Rédei polynomials and solutions of polynomial Pell equations.
//!
//! The crate is organized bottom-up:
//!
//! - [`polyring`]: dense univariate polynomials over `Z` and `Q`, with a text
//!   parser/formatter and a JSON form.
//! - [`polymat`]: square matrices of polynomials, powers, determinants and
//!   characteristic polynomials.
//! - [`redei`]: the pair `(N_n, D_n)` by recurrence, matrix power and closed form.
//! - [`pell2`]: solutions of `P² − (f² + d) Q² = 1`, integrality, descent.
//! - [`pellm`]: the degree-`m` circulant analogue.
//! - [`cli`]: the `pellred` command-line front end.
//!
//! ```
//! use pellred::pell2::{solve, verify, PellProblem};
//! use pellred::polyring::parse_poly;
//!
//! let problem = PellProblem::new(parse_poly("x^2").unwrap(), 2).unwrap();
//! let sol = solve(&problem, 4).unwrap();
//! assert_eq!(sol.p.to_string(), "2x^8+4x^4+1");
//! assert!(verify(&sol.p, &sol.q, problem.radicand()));
//! ```

pub mod cli;
pub mod error;
pub mod pell2;
pub mod pellm;
pub mod polymat;
pub mod polyring;
pub mod redei;

pub use error::{Error, Result};
