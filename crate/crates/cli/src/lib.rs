//! Model files, expression parsing and the `coulombkit` subcommands.

pub mod commands;
pub mod expr;
pub mod model;
