//! Exact scalar arithmetic: finite fields `F_{p^m}`, embeddings between
//! them, and the quadratic ring `Z[sqrt(d)]` with its reduction mod p.

mod embed;
mod field;
mod quad;

pub use embed::{fq_embed, FieldEmbedding};
pub use field::{is_prime, FqCtx, FqElem, MAX_EXTENSION_DEGREE};
pub use quad::{quad_reduce_mod_p, sqrt_residue, QuadInt};
