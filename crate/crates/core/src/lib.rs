pub mod cli;
pub mod coloring;
pub mod eulerian;
pub mod exactla;
pub mod knotio;
