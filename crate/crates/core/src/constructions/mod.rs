//! Derived algebroids: prolongations, connections, products and subalgebroids.

mod connection;
mod product;
mod prolong;
mod subalgebroid;

pub use connection::{
    example_pi_on_prolongation, hlift, horizontal_projector, j1_structure, Connection,
    LiftCertificate,
};
pub use product::{direct_product, Product};
pub use prolong::{clift_endo, prolong, Prolongation};
pub use subalgebroid::{
    graph, graph_theorem_check, is_acp_morphism, is_coisotropic, is_lagrangian, AcpMorphismReport,
    Certification, GraphTheoremReport, IsotropyReport, Subalgebroid,
};
