use std::collections::VecDeque;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite group by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

impl GroupTable {
    /// Validates closure, identity at index 0, associativity and inverses.
    pub fn new(mul: Vec<Vec<u32>>) -> Result<GroupTable> {
        let n = mul.len();
        let bad = |m: String| Err(Error::InvalidGroupTable(m));
        if n == 0 {
            return bad("empty table".into());
        }
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x as usize >= n) {
                return bad(format!("entry {x} out of range in row {a}"));
            }
        }
        if let Some(a) = (0..n).find(|&a| mul[0][a] != a as u32 || mul[a][0] != a as u32) {
            return bad(format!("index 0 is not an identity for {a}"));
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == 0) {
                Some(b) if mul[b][a] == 0 => inverse[a] = b as u32,
                _ => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = mul[a][b] as usize;
                    let bc = mul[b][c] as usize;
                    if mul[ab][c] != mul[a][bc] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(GroupTable { mul, inverse })
    }

    pub fn cyclic(n: u32) -> Result<GroupTable> {
        GroupTable::product_of_cyclic(&[n])
    }

    /// `Z_{n_1} × ... × Z_{n_r}`; element `(a_1, ..., a_r)` has mixed-radix
    /// index with the last factor varying fastest.
    pub fn product_of_cyclic(orders: &[u32]) -> Result<GroupTable> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidGroupTable(format!(
                "bad cyclic orders {orders:?}"
            )));
        }
        let n: usize = orders.iter().map(|&o| o as usize).product();
        let digits = |mut x: usize| {
            let mut d = vec![0u32; orders.len()];
            for (i, &o) in orders.iter().enumerate().rev() {
                d[i] = (x % o as usize) as u32;
                x /= o as usize;
            }
            d
        };
        let index = |d: &[u32]| {
            d.iter()
                .zip(orders)
                .fold(0usize, |acc, (&x, &o)| acc * o as usize + x as usize)
        };
        let mul = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let db = digits(b);
                        let s: Vec<u32> = da
                            .iter()
                            .zip(&db)
                            .zip(orders)
                            .map(|((x, y), o)| (x + y) % o)
                            .collect();
                        index(&s) as u32
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(mul)
    }

    /// `S_3` as permutations of three points, listed as
    /// `id, (12), (13), (23), (123), (132)`.
    pub fn symmetric3() -> GroupTable {
        let perms: [[u8; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        // (p q)(x) = p(q(x))
        let mul = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let c: [u8; 3] = std::array::from_fn(|x| perms[a][perms[b][x] as usize]);
                        perms.iter().position(|p| *p == c).unwrap() as u32
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(mul).expect("S_3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize][b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn table(&self) -> &[Vec<u32>] {
        &self.mul
    }

    pub fn element_order(&self, a: u32) -> u32 {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a membership mask.
    fn closure(&self, gens: &[u32]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// The commutator subgroup `[G, G]` as a membership mask.
    pub fn commutator_subgroup(&self) -> Vec<bool> {
        let n = self.order() as u32;
        let mut comms: Vec<u32> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)));
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    /// All homomorphisms `G → Z/m` written additively, i.e. exponents
    /// `e` with `χ(g) = ξ^{e(g)}` for a primitive `m`-th root `ξ`.
    ///
    /// Homomorphisms factor through `G/[G,G]`; values are assigned to a
    /// generating set of the quotient subject to each generator's order
    /// there, extended along the table and kept when multiplicative.
    /// The trivial character comes first; the rest follow in lexicographic
    /// order of generator values.
    pub fn characters_mod(&self, m: u64) -> Vec<Vec<u64>> {
        let n = self.order();
        let comm = self.commutator_subgroup();
        let comm_elems: Vec<u32> = (0..n as u32).filter(|&g| comm[g as usize]).collect();
        // Greedy generators of the quotient with their orders there.
        let mut gens: Vec<(u32, u64)> = Vec::new();
        let mut span = comm.clone();
        for g in 0..n as u32 {
            if span[g as usize] {
                continue;
            }
            let mut k = 1u64;
            let mut x = g;
            while !comm[x as usize] {
                x = self.mul(x, g);
                k += 1;
            }
            gens.push((g, k));
            let mut all: Vec<u32> = comm_elems.clone();
            all.extend(gens.iter().map(|(g, _)| *g));
            span = self.closure(&all);
        }
        // Allowed exponents: e * order ≡ 0 (mod m).
        let choices: Vec<Vec<u64>> = gens
            .iter()
            .map(|&(_, o)| {
                let d = o.gcd(&m);
                (0..d).map(|k| k * (m / d)).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut pick = vec![0usize; gens.len()];
        loop {
            let values: Vec<u64> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Some(e) = self.extend_character(&gens, &values, &comm_elems, m) {
                out.push(e);
            }
            // Odometer over the choices, last generator fastest.
            let mut pos = gens.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                pick[pos] += 1;
                if pick[pos] < choices[pos].len() {
                    break;
                }
                pick[pos] = 0;
            }
        }
    }

    fn extend_character(
        &self,
        gens: &[(u32, u64)],
        values: &[u64],
        comm: &[u32],
        m: u64,
    ) -> Option<Vec<u64>> {
        let n = self.order();
        let mut e: Vec<Option<u64>> = vec![None; n];
        e[0] = Some(0);
        let mut steps: Vec<(u32, u64)> = gens
            .iter()
            .map(|(g, _)| *g)
            .zip(values.iter().copied())
            .collect();
        steps.extend(comm.iter().map(|&c| (c, 0)));
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            let ex = e[x as usize].unwrap();
            for &(g, v) in &steps {
                let y = self.mul(x, g) as usize;
                let ey = (ex + v) % m;
                match e[y] {
                    None => {
                        e[y] = Some(ey);
                        queue.push_back(y as u32);
                    }
                    Some(old) if old != ey => return None,
                    _ => {}
                }
            }
        }
        let e: Vec<u64> = e.into_iter().collect::<Option<_>>()?;
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                if e[self.mul(a, b) as usize] != (e[a as usize] + e[b as usize]) % m {
                    return None;
                }
            }
        }
        Some(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_commutator_a3() {
        let g = GroupTable::symmetric3();
        assert_ne!(g.mul(1, 2), g.mul(2, 1));
        let c = g.commutator_subgroup();
        assert_eq!(c, vec![true, false, false, false, true, true]);
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        // A Latin square with identity that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupTable::new(t),
            Err(Error::InvalidGroupTable(_))
        ));
        assert!(GroupTable::new(vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn character_counts() {
        assert_eq!(GroupTable::cyclic(2).unwrap().characters_mod(2).len(), 2);
        assert_eq!(GroupTable::cyclic(3).unwrap().characters_mod(6).len(), 3);
        assert_eq!(GroupTable::cyclic(3).unwrap().characters_mod(2).len(), 1);
        assert_eq!(GroupTable::symmetric3().characters_mod(2).len(), 2);
        assert_eq!(
            GroupTable::product_of_cyclic(&[2, 2])
                .unwrap()
                .characters_mod(2)
                .len(),
            4
        );
        assert_eq!(GroupTable::cyclic(4).unwrap().characters_mod(4).len(), 4);
        assert_eq!(GroupTable::cyclic(4).unwrap().characters_mod(2).len(), 2);
    }

    #[test]
    fn product_indexing() {
        let g = GroupTable::product_of_cyclic(&[2, 3]).unwrap();
        // (1,0) + (0,1) = (1,1) -> index 4
        assert_eq!(g.mul(3, 1), 4);
        assert_eq!(g.order(), 6);
    }
}
