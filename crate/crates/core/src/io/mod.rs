//! File formats: IFS spec JSON, point CSV, density grids and binary PPM.

pub mod csv;
pub mod raster;
pub mod spec_file;
