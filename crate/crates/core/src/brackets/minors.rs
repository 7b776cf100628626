use std::collections::HashMap;

use crate::poly::Polynomial;

/// Memoized minors of a k×N polynomial matrix. The minor for a column mask
/// with `r` bits uses the first `r` rows and is expanded along row `r-1`.
pub(crate) struct Minors<'a> {
    rows: &'a [Vec<Polynomial>],
    memo: HashMap<u64, Polynomial>,
}

impl<'a> Minors<'a> {
    pub fn new(rows: &'a [Vec<Polynomial>]) -> Self {
        Self { rows, memo: HashMap::new() }
    }

    pub fn get(&mut self, mask: u64) -> Polynomial {
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let ctx = self.rows[0][0].context().clone();
        let r = mask.count_ones() as usize;
        let value = if r == 0 {
            Polynomial::one(&ctx)
        } else {
            let row = &self.rows[r - 1];
            let mut acc = Polynomial::zero(&ctx);
            let cols: Vec<usize> = (0..64).filter(|c| mask >> c & 1 == 1).collect();
            for (pos, &c) in cols.iter().enumerate() {
                if row[c].is_zero() {
                    continue;
                }
                let sub = self.get(mask & !(1 << c));
                if sub.is_zero() {
                    continue;
                }
                let term = &row[c] * &sub;
                // sign (-1)^(r-1+pos)
                acc = if (r - 1 + pos) % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        };
        self.memo.insert(mask, value.clone());
        value
    }
}

pub(crate) fn mask_of(cols: &[usize]) -> u64 {
    cols.iter().fold(0, |m, &c| m | 1 << c)
}
