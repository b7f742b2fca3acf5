pub mod malformed;
pub mod oracle;
