pub mod analyze;
pub mod gen;
pub mod kscan;
pub mod noisestudy;
pub mod verify;
