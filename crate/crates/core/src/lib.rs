pub mod element;
pub mod error;
pub mod kary;
pub mod words;
pub mod green;
pub mod plep;
pub mod measure;
pub mod text;
pub mod cli;
