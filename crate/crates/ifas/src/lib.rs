//! File formats, verification sweeps and the command-line front end for
//! [`ifas_core`].

pub mod cli;
pub mod formats;
pub mod output;
pub mod sample;
pub mod verify;
