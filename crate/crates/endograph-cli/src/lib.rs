//! Library surface of the command-line tool: the group catalog, the
//! verification checks, and graph export.

pub mod catalog;
pub mod checks;
pub mod export;
