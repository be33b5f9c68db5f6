pub mod characters;
pub mod cli;
pub mod closed_forms;
pub mod flag_engine;
pub mod gen_series;
pub mod qpoly;
