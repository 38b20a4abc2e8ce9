//! The fixed family of algebras every structural check is run over.

use crate::algebra::NakayamaAlgebra;

/// Non-uniform Kupisch series included in the battery.
pub const NON_UNIFORM: [&str; 10] = [
    "kupisch:line=3,2,2,1",
    "kupisch:line=2,3,2,1",
    "kupisch:line=4,3,2,2,1",
    "kupisch:line=2,2,3,2,1",
    "kupisch:cycle=2,3",
    "kupisch:cycle=3,2,2",
    "kupisch:cycle=2,2,3",
    "kupisch:cycle=4,3,3,3",
    "kupisch:cycle=3,3,4,4",
    "kupisch:line=2,1;cycle=3,2,2",
];

/// `A_n^h` and `Ã_n^h` for `1 <= n <= nmax`, `2 <= h <= hmax` (line
/// duplicates with `h >= n` collapsed), followed by the non-uniform series
/// when `with_non_uniform` is set.
pub fn battery(nmax: usize, hmax: usize, with_non_uniform: bool) -> Vec<(String, NakayamaAlgebra)> {
    let mut out: Vec<(String, NakayamaAlgebra)> = Vec::new();
    for n in 1..=nmax {
        for h in 2..=hmax {
            let a = NakayamaAlgebra::build_line(n, h).expect("valid line");
            if !out.iter().any(|(_, b)| *b == a) {
                out.push((format!("line:{n},{h}"), a));
            }
        }
    }
    for n in 1..=nmax {
        for h in 2..=hmax {
            out.push((format!("cycle:{n},{h}"), NakayamaAlgebra::build_cycle(n, h).expect("valid cycle")));
        }
    }
    if with_non_uniform {
        for s in NON_UNIFORM {
            out.push((s.to_string(), NakayamaAlgebra::parse(s).expect("valid series")));
        }
    }
    out
}

/// The standard battery: `n, h <= 5` plus the non-uniform series.
pub fn standard() -> Vec<(String, NakayamaAlgebra)> {
    battery(5, 5, true)
}
