pub mod geom;
pub mod model;
pub mod verdict;
pub mod certificate;
pub mod graphs;
