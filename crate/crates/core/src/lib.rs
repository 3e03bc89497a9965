pub mod cells;
pub mod complex;
pub mod error;
pub mod free;
pub mod hochschild;
pub mod prelie;
pub mod int;
pub mod io;
pub mod ring;
pub mod sparse;
pub mod surjection;

pub use complex::{bockstein, induced_map_rank, ChainComplex, ChainMap, HomologySummary};
pub use error::{Error, Result};
pub use free::FreeElement;
pub use int::Int;
pub use ring::{binom, binom_minus1, Ring};
