//! Published cell values used by `verify tables`.

pub const GAMMA0_TABLE: [(u32, &str); 4] = [
    (2, "1/(2^11·3^3)"),
    (3, "17/(2^14·3^5·5)"),
    (4, "17·31/(2^19·3^6·11)"),
    (5, "17·31·691/(2^22·3^7·5·7·11)"),
];
pub const GAMMA1_TABLE: [(u32, &str); 2] =
    [(3, "1/(2^14·3^2·5^2)"), (5, "31·691/(2^22·3^3·5^3·7·13)")];
pub const DELTA_TABLE: [(u32, &str); 3] = [
    (2, "67/(2^10·3^3·5^3·7)"),
    (3, "19^2·67/(2^13·3^5·5^4·7)"),
    (4, "19^2·67·191·2161/(2^18·3^6·5^5·7·11)"),
];
/// `(n, χ(Γ^s_n), χ(Δ_n))` as displayed, with exponent form for every cell.
pub const APPROX_TABLE: [(u32, &str, &str); 7] = [
    (2, "1.808e-5", "2.769e-6"),
    (3, "2.712e-7", "2.777e-6"),
    (4, "1.253e-7", "2.171e-4"),
    (5, "1.662e-8", "3.162e0"),
    (10, "1.736e8", "5.771e64"),
    (15, "8.624e55", "3.510e218"),
    (20, "1.654e151", "1.833e478"),
];
