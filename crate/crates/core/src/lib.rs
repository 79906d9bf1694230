//! Planar functions `Tr(a·x^{q+1}) + ℓ(x²)` over finite field towers.

pub mod acceptance;
pub mod charsum;
pub mod config;
pub mod families;
pub mod field;
pub mod fpmat;
pub mod linpoly;
pub mod planarity;
pub mod poly;
pub mod search;
