pub mod arith;
pub mod bounds;
pub mod covolume;
pub mod local;
pub mod quaternion;
pub mod zeta;
