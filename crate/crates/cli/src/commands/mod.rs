pub mod heis;
pub mod rep;
pub mod twisted;
pub mod wreath;
