pub mod algebra;
pub mod digraph;
pub mod sets;
pub mod polytope;
pub mod dijoin;
pub mod matroid;
pub mod greedoid;
pub mod parking;
pub mod catalog;
pub mod cli;
