pub mod characters;
pub mod classes;
pub mod colored_perm;
pub mod cyclotomic;
pub mod error;
pub mod model;
pub mod roots;
pub mod rsk;
pub mod shapes;
pub mod verify;
