use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    unit: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, associativity, a two-sided unit and inverses.
    pub fn from_table(rows: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        if names.len() != n {
            return Err(Error::InvalidGroupTable(format!("{} names for order {n}", names.len())));
        }
        for (a, r) in rows.iter().enumerate() {
            if r.len() != n || r.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroupTable(format!("row {a} is not a map into the group")));
            }
        }
        let table: Vec<usize> = rows.concat();
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroupTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroupTable("no unit".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| m(a, b) == unit && m(b, a) == unit)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {a} has no inverse")))?;
            inverse.push(b);
        }
        Ok(FiniteGroup { order: n, table, unit, inverse, names })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/n with generator `g`; elements named `e`, `g`, `g2`, ...
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        Self::from_table(rows, names).expect("cyclic table is a group")
    }

    /// The symmetric group on `n` letters, permutations in lexicographic order,
    /// composed as functions: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let rows =
            perms.iter().map(|s| perms.iter().map(|t| idx(&t.iter().map(|&i| s[i]).collect())).collect()).collect();
        let names = perms
            .iter()
            .map(|p| {
                if p.iter().enumerate().all(|(i, &x)| i == x) {
                    "e".to_string()
                } else {
                    format!("[{}]", p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""))
                }
            })
            .collect();
        Self::from_table(rows, names).expect("symmetric table is a group")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order, b.order);
        let rows =
            (0..n * m).map(|x| (0..n * m).map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).collect()).collect();
        let names = (0..n * m).map(|x| format!("({},{})", a.names[x / m], b.names[x % m])).collect();
        Self::from_table(rows, names).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(z3.mul(1, 2), 0);
        assert_eq!(z3.inv(1), 2);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.unit(), 0);
        let k4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(k4.is_abelian());
        assert!((0..4).all(|a| k4.mul(a, a) == k4.unit()));
    }

    #[test]
    fn rejects_non_groups() {
        let bad = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], vec!["a".into(), "b".into()]);
        assert!(matches!(bad, Err(Error::InvalidGroupTable(_))));
        let bad = FiniteGroup::from_table(vec![vec![0, 2]], vec!["a".into()]);
        assert!(bad.is_err());
    }
}
