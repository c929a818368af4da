//! Fans, toric Cox rings and proper transforms.

mod blowup;
mod fan;
mod poly;

pub use blowup::{admissibility_check, embed_hypersurface, proper_transform, Admissibility, Verdict};
pub use fan::{Fan, ToricCoxPresentation};
pub use poly::LaurentPolynomial;
