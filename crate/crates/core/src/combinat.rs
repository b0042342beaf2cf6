//! Partition enumeration shared by the Chern-monomial and Hilbert-scheme code.

/// Partitions of `d` into at most `max_parts` parts, each a weakly decreasing
/// vector padded with zeros to length `max_parts`. Listed in decreasing
/// lexicographic order.
pub fn partitions_padded(d: u32, max_parts: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(max_parts);
    fill_parts(d, d, max_parts, &mut cur, &mut out);
    for p in &mut out {
        p.resize(max_parts, 0);
    }
    out
}

fn fill_parts(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    if rem == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=rem.min(max_part)).rev() {
        cur.push(part as u16);
        fill_parts(rem - part, part, slots - 1, cur, out);
        cur.pop();
    }
}

/// Multiplicity vectors `(a_1, .., a_len)` with `sum_i i * a_i = weight`, in
/// decreasing lexicographic order. With `len >= weight` these are exactly the
/// partitions of `weight`; they also index the Chern monomials
/// `c_1^a_1 ... c_len^a_len` of that weight.
pub fn multiplicity_vectors(weight: u32, len: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; len];
    fill_mults(weight, 0, &mut cur, &mut out);
    out
}

fn fill_mults(rem: u32, idx: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    if idx == cur.len() {
        if rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let part = idx as u32 + 1;
    for a in (0..=rem / part).rev() {
        cur[idx] = a as u16;
        fill_mults(rem - a * part, idx + 1, cur, out);
    }
    cur[idx] = 0;
}
