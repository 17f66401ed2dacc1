pub mod biset;
pub mod bitset;
pub mod error;
pub mod formats;
pub mod gf2;
pub mod group;
pub mod lattice;
pub mod slices;
pub mod spectrum;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
pub mod gset;
mod uf;
pub mod ring;

pub use ring::{Context, QRingElement, RingElement, RingKind};
