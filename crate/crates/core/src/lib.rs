pub mod family;
pub mod fixtures;
pub mod planar;
pub mod rewrite;
pub mod verifier;
pub mod oracle;
pub mod catalog;
pub mod constructor;
pub mod dualize;
