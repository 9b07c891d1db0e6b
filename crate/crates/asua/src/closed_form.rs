//! Closed-form ASUA evaluators for paths, cycles, stems, and sea dragons.
//!
//! Every formula here is O(1) per vertex and is contracted to agree exactly
//! with the rational solver; the [`crate::verify`] sweeps enforce that
//! contract instance by instance. Spine indices are 1-based to match the
//! `v1..vn` convention, and the absorber is always `v_n`.
//!
//! The SD2/SD3 evaluators route through the SD4 formula, whose first piece
//! carries the constant `(k-1)^2`. Statements of the SD2/SD3 forms are
//! sometimes seen with `(k+1)^2` instead; that variant disagrees with the
//! solver on every instance that has at least one leaf or stem, and is kept
//! available as [`sd23_printed_asua`] so the refutation stays reproducible
//! (`verify --sd23-printed-constant`).

use crate::error::{Error, Result};
use crate::rational::{natural, Rational};

/// Expected steps from `v_i` to the absorbing end `v_n` of the path `P_n`:
/// `(n-1)^2 - (i-1)^2`.
pub fn path_asua(n: u64, i: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("path needs n >= 2, got n={n}")));
    }
    if i < 1 || i > n - 1 {
        return Err(Error::OutOfRange(format!(
            "path index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
        )));
    }
    Ok((n - 1) * (n - 1) - (i - 1) * (i - 1))
}

/// Expected steps from `v_i` to the absorbing vertex `v_n` of the cycle
/// `C_n`: `i(n-i)`.
pub fn cycle_asua(n: u64, i: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("cycle needs n >= 3, got n={n}")));
    }
    if i < 1 || i > n - 1 {
        return Err(Error::OutOfRange(format!(
            "cycle index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
        )));
    }
    Ok(i * (n - i))
}

/// Excess of stem vertex `u_j` over its attachment vertex, for a pendant
/// path `u_1..u_l` hanging off `v = u_(l+1)`: `l^2 - (j-1)^2`. `u_1` is the
/// far leaf; `j = l+1` names the attachment vertex itself and yields 0.
pub fn stem_offset(l: u64, j: u64) -> Result<u64> {
    if l < 1 {
        return Err(Error::OutOfRange(format!("stem length must be >= 1, got {l}")));
    }
    if j < 1 || j > l + 1 {
        return Err(Error::OutOfRange(format!(
            "stem index must satisfy 1 <= j <= l+1, got j={j}, l={l}"
        )));
    }
    Ok(l * l - (j - 1) * (j - 1))
}

/// Parameters identifying a member of the sea-dragon families. The spine is
/// `v_1..v_n` with absorber `v_n`; leaves and stems attach at interior
/// spine positions `2 <= k <= n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeaDragonSpec {
    /// Single leaves at strictly increasing positions `k_1 < ... < k_a`.
    Sd1 { n: u64, leaf_positions: Vec<u64> },
    /// `b` leaves at one position `k`.
    Sd2 { n: u64, position: u64, leaf_count: u64 },
    /// One stem of length `c` at position `k`.
    Sd3 { n: u64, position: u64, stem_length: u64 },
    /// Stems of lengths `c_1..c_r` all at position `k`.
    Sd4 { n: u64, position: u64, stem_lengths: Vec<u64> },
}

impl SeaDragonSpec {
    pub fn spine_len(&self) -> u64 {
        match *self {
            SeaDragonSpec::Sd1 { n, .. }
            | SeaDragonSpec::Sd2 { n, .. }
            | SeaDragonSpec::Sd3 { n, .. }
            | SeaDragonSpec::Sd4 { n, .. } => n,
        }
    }

    /// Total stem mass `d`: the number of off-spine vertices.
    pub fn stem_mass(&self) -> u64 {
        match self {
            SeaDragonSpec::Sd1 { leaf_positions, .. } => leaf_positions.len() as u64,
            SeaDragonSpec::Sd2 { leaf_count, .. } => *leaf_count,
            SeaDragonSpec::Sd3 { stem_length, .. } => *stem_length,
            SeaDragonSpec::Sd4 { stem_lengths, .. } => stem_lengths.iter().sum(),
        }
    }

    /// Attachments as `(position, stem lengths)` pairs, positions ascending.
    /// A leaf is a stem of length 1.
    pub fn attachments(&self) -> Vec<(u64, Vec<u64>)> {
        match self {
            SeaDragonSpec::Sd1 { leaf_positions, .. } => {
                leaf_positions.iter().map(|&k| (k, vec![1])).collect()
            }
            SeaDragonSpec::Sd2 { position, leaf_count, .. } => {
                vec![(*position, vec![1; *leaf_count as usize])]
            }
            SeaDragonSpec::Sd3 { position, stem_length, .. } => {
                vec![(*position, vec![*stem_length])]
            }
            SeaDragonSpec::Sd4 { position, stem_lengths, .. } => {
                vec![(*position, stem_lengths.clone())]
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.spine_len();
        if n < 2 {
            return Err(Error::BadSpec(format!("spine needs n >= 2, got n={n}")));
        }
        match self {
            SeaDragonSpec::Sd1 { leaf_positions, .. } => {
                for pair in leaf_positions.windows(2) {
                    if pair[0] >= pair[1] {
                        return Err(Error::BadSpec(
                            "leaf positions must be strictly increasing".into(),
                        ));
                    }
                }
                if let (Some(&first), Some(&last)) =
                    (leaf_positions.first(), leaf_positions.last())
                {
                    if first < 2 || last > n - 1 {
                        return Err(Error::BadSpec(format!(
                            "leaf positions must satisfy 2 <= k <= n-1 = {}",
                            n - 1
                        )));
                    }
                }
            }
            SeaDragonSpec::Sd2 { position, leaf_count, .. } => {
                check_position(n, *position)?;
                if *leaf_count < 1 {
                    return Err(Error::BadSpec("leaf count must be >= 1".into()));
                }
            }
            SeaDragonSpec::Sd3 { position, stem_length, .. } => {
                check_position(n, *position)?;
                if *stem_length < 1 {
                    return Err(Error::BadSpec("stem length must be >= 1".into()));
                }
            }
            SeaDragonSpec::Sd4 { position, stem_lengths, .. } => {
                check_position(n, *position)?;
                if stem_lengths.is_empty() {
                    return Err(Error::BadSpec("SD4 needs at least one stem".into()));
                }
                if stem_lengths.iter().any(|&c| c < 1) {
                    return Err(Error::BadSpec("stem lengths must all be >= 1".into()));
                }
            }
        }
        Ok(())
    }

    /// Spine value dispatched by variant.
    pub fn asua(&self, i: u64) -> Result<u64> {
        match self {
            SeaDragonSpec::Sd1 { .. } => sd1_asua(self, i),
            SeaDragonSpec::Sd2 { .. } => sd2_asua(self, i),
            SeaDragonSpec::Sd3 { .. } => sd3_asua(self, i),
            SeaDragonSpec::Sd4 { .. } => sd4_asua(self, i),
        }
    }
}

fn check_position(n: u64, k: u64) -> Result<()> {
    if n < 3 || k < 2 || k > n - 1 {
        Err(Error::BadSpec(format!(
            "attachment position must satisfy 2 <= k <= n-1, got k={k}, n={n}"
        )))
    } else {
        Ok(())
    }
}

fn check_spine_index(n: u64, i: u64) -> Result<()> {
    if i < 1 || i > n - 1 {
        Err(Error::OutOfRange(format!(
            "spine index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
        )))
    } else {
        Ok(())
    }
}

/// One piece of the SD1 formula, exposed so the boundary-agreement property
/// (adjacent pieces coincide at shared indices) can be checked directly.
/// With the conventions `k_0 = 1` and an empty trailing sum, section `s`
/// ranges over `0..=a` and the `s = a` piece is the tail
/// `n^2 - i^2 + 2(a-1)(n-i)`.
pub fn sd1_piece(n: u64, leaf_positions: &[u64], s: usize, i: u64) -> u64 {
    let a = leaf_positions.len() as i64;
    let (n, i, s) = (n as i64, i as i64, s as i64);
    let tail_sum: i64 = leaf_positions[s as usize..].iter().map(|&k| k as i64).sum();
    let value = n * n - i * i + 2 * (a - 1) * n - 2 * (s - 1) * i - 2 * tail_sum;
    debug_assert!(value >= 0, "SD1 piece produced a negative value");
    value as u64
}

/// Spine value for an SD1 tree. With no leaves the spec degenerates to the
/// path formula.
pub fn sd1_asua(spec: &SeaDragonSpec, i: u64) -> Result<u64> {
    spec.validate()?;
    let SeaDragonSpec::Sd1 { n, leaf_positions } = spec else {
        return Err(Error::BadSpec("expected an SD1 spec".into()));
    };
    let n = *n;
    if leaf_positions.is_empty() {
        return path_asua(n, i);
    }
    check_spine_index(n, i)?;
    let s = leaf_positions.iter().filter(|&&k| k <= i).count();
    Ok(sd1_piece(n, leaf_positions, s, i))
}

/// Value of the leaf hanging at spine position `k` of an SD1 tree: one more
/// than its attachment vertex.
pub fn sd1_leaf_asua(spec: &SeaDragonSpec, k: u64) -> Result<u64> {
    match spec {
        SeaDragonSpec::Sd1 { leaf_positions, .. } if leaf_positions.contains(&k) => {
            Ok(sd1_asua(spec, k)? + 1)
        }
        SeaDragonSpec::Sd1 { .. } => Err(Error::BadSpec(format!("no leaf at position {k}"))),
        _ => Err(Error::BadSpec("expected an SD1 spec".into())),
    }
}

/// Core SD4 spine formula for position `k`, total stem mass `d`:
/// `n^2 - k^2 + 2(d-1)(n-k) + (k-1)^2 - (i-1)^2` left of the attachment,
/// `n^2 - i^2 + 2(d-1)(n-i)` from the attachment rightward.
pub fn sd4_value(n: u64, k: u64, d: u64, i: u64) -> u64 {
    let (n, k, d, i) = (n as i64, k as i64, d as i64, i as i64);
    let value = if i < k {
        n * n - k * k + 2 * (d - 1) * (n - k) + (k - 1) * (k - 1) - (i - 1) * (i - 1)
    } else {
        n * n - i * i + 2 * (d - 1) * (n - i)
    };
    debug_assert!(value >= 0, "SD4 formula produced a negative value");
    value as u64
}

/// The refuted first-piece variant with `(k+1)^2` in place of `(k-1)^2`.
/// Kept only so the mismatch against the solver can be reproduced.
pub fn sd23_printed_value(n: u64, k: u64, d: u64, i: u64) -> u64 {
    let (n, k, d, i) = (n as i64, k as i64, d as i64, i as i64);
    let value = if i < k {
        n * n - k * k + 2 * (d - 1) * (n - k) + (k + 1) * (k + 1) - (i - 1) * (i - 1)
    } else {
        n * n - i * i + 2 * (d - 1) * (n - i)
    };
    debug_assert!(value >= 0);
    value as u64
}

fn position_and_mass(spec: &SeaDragonSpec) -> Result<(u64, u64)> {
    match spec {
        SeaDragonSpec::Sd1 { .. } => Err(Error::BadSpec(
            "SD1 attaches at several positions; use sd1_asua".into(),
        )),
        SeaDragonSpec::Sd2 { position, .. }
        | SeaDragonSpec::Sd3 { position, .. }
        | SeaDragonSpec::Sd4 { position, .. } => Ok((*position, spec.stem_mass())),
    }
}

/// Spine value for an SD4 tree.
pub fn sd4_asua(spec: &SeaDragonSpec, i: u64) -> Result<u64> {
    spec.validate()?;
    if !matches!(spec, SeaDragonSpec::Sd4 { .. }) {
        return Err(Error::BadSpec("expected an SD4 spec".into()));
    }
    let (k, d) = position_and_mass(spec)?;
    check_spine_index(spec.spine_len(), i)?;
    Ok(sd4_value(spec.spine_len(), k, d, i))
}

/// Spine value for an SD2 tree (`b` leaves at one position), evaluated as
/// the SD4 formula with `d = b`.
pub fn sd2_asua(spec: &SeaDragonSpec, i: u64) -> Result<u64> {
    spec.validate()?;
    if !matches!(spec, SeaDragonSpec::Sd2 { .. }) {
        return Err(Error::BadSpec("expected an SD2 spec".into()));
    }
    let (k, d) = position_and_mass(spec)?;
    check_spine_index(spec.spine_len(), i)?;
    Ok(sd4_value(spec.spine_len(), k, d, i))
}

/// Spine value for an SD3 tree (one stem of length `c`), evaluated as the
/// SD4 formula with `d = c`.
pub fn sd3_asua(spec: &SeaDragonSpec, i: u64) -> Result<u64> {
    spec.validate()?;
    if !matches!(spec, SeaDragonSpec::Sd3 { .. }) {
        return Err(Error::BadSpec("expected an SD3 spec".into()));
    }
    let (k, d) = position_and_mass(spec)?;
    check_spine_index(spec.spine_len(), i)?;
    Ok(sd4_value(spec.spine_len(), k, d, i))
}

/// The refuted `(k+1)^2` variant evaluated on an SD2/SD3/SD4 spec.
pub fn sd23_printed_asua(spec: &SeaDragonSpec, i: u64) -> Result<u64> {
    spec.validate()?;
    let (k, d) = position_and_mass(spec)?;
    check_spine_index(spec.spine_len(), i)?;
    Ok(sd23_printed_value(spec.spine_len(), k, d, i))
}

/// Value of stem vertex `u_j` on stem `m` (0-based) of an SD2/SD3/SD4 tree:
/// attachment value plus the stem offset.
pub fn stem_vertex_asua(spec: &SeaDragonSpec, stem: usize, j: u64) -> Result<u64> {
    spec.validate()?;
    let (k, _) = position_and_mass(spec)?;
    let attachments = spec.attachments();
    let lengths = &attachments[0].1;
    let c = *lengths
        .get(stem)
        .ok_or_else(|| Error::BadSpec(format!("no stem with index {stem}")))?;
    Ok(spec.asua(k)? + stem_offset(c, j)?)
}

/// Local rule at a vertex `v` with neighbors `{x, y, leaf}`:
/// `t(v) = (t(x) + t(y)) / 2 + 2`. The caller asserts the local structure.
pub fn local_rule_degree3(tx: &Rational, ty: &Rational) -> Rational {
    (tx + ty) / natural(2) + natural(2)
}

/// Local rule at a vertex `v` with neighbors `{x, y}` plus stems of total
/// mass `d`: `t(v) = (t(x) + t(y)) / 2 + (d + 1)`. At `d = 1` this is
/// exactly the degree-3 leaf rule.
pub fn local_rule_stem_branch(tx: &Rational, ty: &Rational, d: u64) -> Result<Rational> {
    if d < 1 {
        return Err(Error::BadSpec("stem mass d must be >= 1".into()));
    }
    Ok((tx + ty) / natural(2) + natural(d + 1))
}
