pub mod analyze;
pub mod construct;
pub mod count;
