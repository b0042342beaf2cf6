use super::Rational;

/// Solves `A x = b` exactly by Gauss-Jordan elimination.
///
/// `rows` holds the equations as `(coefficients, rhs)`. Returns one solution
/// (free variables set to zero) or `None` when the system is inconsistent.
pub fn solve_linear(rows: &[(Vec<Rational>, Rational)], unknowns: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|(a, b)| {
            let mut r = a.clone();
            r.resize(unknowns, Rational::zero());
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("pivot is nonzero");
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, y) in line.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][unknowns].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        // x + y = 3, x - y = 1
        let rows = vec![(vec![r(1), r(1)], r(3)), (vec![r(1), r(-1)], r(1))];
        assert_eq!(solve_linear(&rows, 2), Some(vec![r(2), r(1)]));
        // x = 1, 2x = 3
        let bad = vec![(vec![r(1)], r(1)), (vec![r(2)], r(3))];
        assert_eq!(solve_linear(&bad, 1), None);
        // overdetermined but consistent
        let over = vec![
            (vec![r(1)], r(2)),
            (vec![r(3)], r(6)),
            (vec![r(0)], r(0)),
        ];
        assert_eq!(solve_linear(&over, 1), Some(vec![r(2)]));
    }
}
