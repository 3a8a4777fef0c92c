pub mod exact;
pub mod numeric;
pub mod series;
pub mod special;
pub mod residue;
pub mod catalog;
pub mod cli;
pub mod report;
