//! Named group presets and the JSON generator-file input format.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// JSON group input: { "degree": n, "generators": [[[1,2],[3,4]], ...] }
/// where each generator is a list of cycles in 1-based labels.
#[derive(Deserialize)]
struct GroupFile {
    degree: usize,
    generators: Vec<Vec<Vec<usize>>>,
}

pub fn group_from_json(text: &str) -> Result<PermGroup> {
    let gf: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::SchemaError(format!("group file: {e}")))?;
    let gens = gf
        .generators
        .iter()
        .map(|cycles| Permutation::from_cycles(gf.degree, cycles))
        .collect();
    Ok(PermGroup::new(gf.degree, gens))
}

pub fn sym(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![1, 2]]));
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]));
    }
    PermGroup::new(n, gens)
}

pub fn alt(n: usize) -> PermGroup {
    assert!(n >= 3);
    let mut gens = vec![Permutation::from_cycles(n, &[vec![1, 2, 3]])];
    if n > 3 {
        if n % 2 == 1 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]));
        } else {
            gens.push(Permutation::from_cycles(n, &[(2..=n).collect()]));
        }
    }
    PermGroup::new(n, gens)
}

/// Dihedral group of order 2n, acting on n points.
pub fn dihedral(order: usize) -> PermGroup {
    assert!(order >= 4 && order % 2 == 0);
    let n = order / 2;
    let rot = Permutation::from_cycles(n, &[(1..=n).collect()]);
    // reflection fixing point 1: i -> n + 2 - i
    let refl = Permutation::from_images(
        (0..n).map(|i| if i == 0 { 0 } else { (n - i) as u8 }).collect(),
    );
    PermGroup::new(n, vec![rot, refl])
}

/// Q_8 in its regular representation on 8 points.
/// Labels: 1, i, -1, -i, j, -j, k, -k.
pub fn quaternion8() -> PermGroup {
    let a = Permutation::from_cycles(8, &[vec![1, 2, 3, 4], vec![5, 7, 6, 8]]);
    let b = Permutation::from_cycles(8, &[vec![1, 5, 3, 6], vec![2, 8, 4, 7]]);
    PermGroup::new(8, vec![a, b])
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
pub fn sl23() -> PermGroup {
    let vectors: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|x| (0..3u8).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let perm_of = |m: [[u8; 2]; 2]| -> Permutation {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = (
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                );
                vectors.iter().position(|&v| v == w).unwrap() as u8
            })
            .collect();
        Permutation::from_images(images)
    };
    let a = perm_of([[1, 1], [0, 1]]);
    let b = perm_of([[0, 2], [1, 0]]);
    PermGroup::new(8, vec![a, b])
}

/// GL(3,2) acting on the 7 nonzero vectors of F_2^3.
pub fn gl32() -> PermGroup {
    let vectors: Vec<u8> = (1..8).collect(); // bitmask x | y<<1 | z<<2
    let perm_of = |m: [[u8; 3]; 3]| -> Permutation {
        let images = vectors
            .iter()
            .map(|&v| {
                let x = [v & 1, (v >> 1) & 1, (v >> 2) & 1];
                let mut w = 0u8;
                for r in 0..3 {
                    let bit = (0..3).map(|c| m[r][c] & x[c]).fold(0, |a, b| a ^ b);
                    w |= bit << r;
                }
                (w - 1) as u8
            })
            .collect();
        Permutation::from_images(images)
    };
    // companion matrix of x^3 + x + 1 and a transvection
    let a = perm_of([[0, 0, 1], [1, 0, 1], [0, 1, 0]]);
    let b = perm_of([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    PermGroup::new(7, vec![a, b])
}

/// PSL(3,3) = SL(3,3) acting on the 13 points of PG(2,3).
pub fn psl33() -> PermGroup {
    // projective points: normalized so the first nonzero coordinate is 1
    let mut points: Vec<[u8; 3]> = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            for z in 0..3u8 {
                let v = [x, y, z];
                if v == [0, 0, 0] {
                    continue;
                }
                if normalize3(v) == v {
                    points.push(v);
                }
            }
        }
    }
    assert_eq!(points.len(), 13);
    let perm_of = |m: [[u8; 3]; 3]| -> Permutation {
        let images = points
            .iter()
            .map(|v| {
                let mut w = [0u8; 3];
                for r in 0..3 {
                    w[r] = (0..3).map(|c| m[r][c] * v[c]).sum::<u8>() % 3;
                }
                let w = normalize3(w);
                points.iter().position(|p| *p == w).unwrap() as u8
            })
            .collect();
        Permutation::from_images(images)
    };
    let a = perm_of([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
    let b = perm_of([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    PermGroup::new(13, vec![a, b])
}

fn normalize3(v: [u8; 3]) -> [u8; 3] {
    let lead = *v.iter().find(|&&c| c != 0).unwrap();
    if lead == 1 {
        return v;
    }
    // lead == 2; multiply by 2
    [(v[0] * 2) % 3, (v[1] * 2) % 3, (v[2] * 2) % 3]
}

/// Resolve a group spec: a preset name or a path to a JSON generator file.
pub fn resolve(spec: &str) -> Result<PermGroup> {
    let spec = spec.trim();
    if let Some(arg) = parse_call(spec, "sym") {
        return Ok(sym(arg));
    }
    if let Some(arg) = parse_call(spec, "alt") {
        return Ok(alt(arg));
    }
    if let Some(arg) = parse_call(spec, "dihedral") {
        return Ok(dihedral(arg));
    }
    match spec {
        "quaternion8" => Ok(quaternion8()),
        "sl23" => Ok(sl23()),
        "gl32" => Ok(gl32()),
        "psl33" => Ok(psl33()),
        _ => {
            if spec.ends_with(".json") {
                let text = std::fs::read_to_string(spec)?;
                group_from_json(&text)
            } else {
                Err(Error::UnknownGroup(spec.to_string()))
            }
        }
    }
}

/// Symmetric-group degree of a spec, when it is sym(n).
pub fn sym_degree(spec: &str) -> Option<usize> {
    parse_call(spec.trim(), "sym")
}

fn parse_call(spec: &str, name: &str) -> Option<usize> {
    let rest = spec.strip_prefix(name)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_orders() {
        assert_eq!(sym(4).order().unwrap(), 24);
        assert_eq!(alt(4).order().unwrap(), 12);
        assert_eq!(alt(5).order().unwrap(), 60);
        assert_eq!(alt(6).order().unwrap(), 360);
        assert_eq!(dihedral(8).order().unwrap(), 8);
        assert_eq!(dihedral(12).order().unwrap(), 12);
        assert_eq!(sl23().order().unwrap(), 24);
        assert_eq!(gl32().order().unwrap(), 168);
    }

    #[test]
    fn quaternion8_structure() {
        let q = quaternion8();
        assert_eq!(q.order().unwrap(), 8);
        let involutions = q
            .elements()
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(involutions, 1); // distinguishes Q_8 from D_8
        assert_eq!(q.class_count().unwrap(), 5);
    }

    #[test]
    fn psl33_order() {
        assert_eq!(psl33().order().unwrap(), 5616);
        assert_eq!(psl33().class_count().unwrap(), 12);
    }

    #[test]
    fn sl23_structure() {
        let g = sl23();
        assert_eq!(g.order().unwrap(), 24);
        assert_eq!(g.class_count().unwrap(), 7);
        // unique involution (the central -I)
        let involutions = g
            .elements()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn group_from_json_roundtrip() {
        let g = group_from_json(r#"{"degree": 4, "generators": [[[1,2]],[[1,2,3,4]]]}"#).unwrap();
        assert_eq!(g.order().unwrap(), 24);
    }

    #[test]
    fn resolve_specs() {
        assert_eq!(resolve("sym(5)").unwrap().order().unwrap(), 120);
        assert!(matches!(resolve("nope"), Err(Error::UnknownGroup(_))));
    }
}
