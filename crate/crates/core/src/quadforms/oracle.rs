//! Bounded-depth partition of reduced forms into classes, used only to
//! cross-check [`h_order`](crate::quadforms::h_order).

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::poly_arith::PolyA;
use crate::quadforms::forms::{enumerate_reduced, reduce_form, BinaryForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCount {
    pub forms: usize,
    /// Classes under SL_2(A) together with the unit twists
    /// `(a, b, c) -> (v a, b, v^-1 c)`, which fix the attached lattice.
    pub classes: usize,
    /// Classes under SL_2(A) alone.
    pub sl2_classes: usize,
    /// The count did not change when the depth was raised by one.
    pub stable: bool,
}

struct Partition<'a> {
    forms: &'a [BinaryForm],
    index: HashMap<&'a BinaryForm, usize>,
    uf: UnionFind<usize>,
}

impl<'a> Partition<'a> {
    fn new(forms: &'a [BinaryForm]) -> Self {
        Partition {
            forms,
            index: forms.iter().enumerate().map(|(i, f)| (f, i)).collect(),
            uf: UnionFind::new(forms.len()),
        }
    }

    fn join(&mut self, i: usize, g: &BinaryForm) -> Result<()> {
        let g = reduce_form(g)?;
        let j = *self
            .index
            .get(&g)
            .ok_or_else(|| Error::Internal(format!("reduced form {g} missing from enumeration")))?;
        self.uf.union(i, j);
        Ok(())
    }

    /// `T_m` and `T_c S T_m` for every given `m` and constant `c`. When
    /// deg a = deg c the constant moves only link reduced forms through
    /// non-reduced ones, so the word is applied before reducing.
    fn translations(&mut self, moves: &[PolyA]) -> Result<()> {
        let fq = self.forms[0].a.fq();
        let constants: Vec<PolyA> = PolyA::all_below_degree(fq, 1).collect();
        for i in 0..self.forms.len() {
            for m in moves {
                let t = self.forms[i].translate(m);
                self.join(i, &t)?;
                let s = t.swap();
                for c in &constants {
                    self.join(i, &s.translate(c))?;
                }
            }
        }
        Ok(())
    }

    fn twists(&mut self) -> Result<()> {
        let fq = self.forms[0].a.fq();
        for i in 0..self.forms.len() {
            for v in fq.units() {
                let g = self.forms[i].unit_twist(v)?;
                self.join(i, &g)?;
            }
        }
        Ok(())
    }

    fn count(&self) -> usize {
        let mut labels = self.uf.clone().into_labeling();
        labels.sort_unstable();
        labels.dedup();
        labels.len()
    }
}

/// Partitions the primitive reduced forms of discriminant `delta` by the
/// words `T_c S T_m` (translations `x -> x + m y` with `deg m <= depth`,
/// constant `c`, swap `S`) and unit twists, re-reducing after every move.
pub fn class_count_oracle(delta: &PolyA, depth: usize) -> Result<ClassCount> {
    let forms = enumerate_reduced(delta)?;
    if forms.is_empty() {
        return Ok(ClassCount {
            forms: 0,
            classes: 0,
            sl2_classes: 0,
            stable: true,
        });
    }
    let fq = delta.fq();
    let mut part = Partition::new(&forms);
    let moves: Vec<PolyA> = PolyA::all_below_degree(fq, depth + 1).collect();
    part.translations(&moves)?;
    let sl2_classes = part.count();
    part.twists()?;
    let classes = part.count();
    let next: Vec<PolyA> = PolyA::all_of_degree(fq, depth + 1).collect();
    part.translations(&next)?;
    Ok(ClassCount {
        forms: forms.len(),
        classes,
        sl2_classes,
        stable: part.count() == classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_arith::Fq;

    fn p(c: &[i64]) -> PolyA {
        PolyA::from_i64s(Fq::new(3).unwrap(), c)
    }

    #[test]
    fn degree_one_discriminant_has_one_class() {
        let c = class_count_oracle(&p(&[0, 2]), 3).unwrap();
        assert_eq!(c.classes, 1);
        assert!(c.stable);
    }

    #[test]
    fn conductor_t_over_2t() {
        let c = class_count_oracle(&p(&[0, 0, 0, 2]), 3).unwrap();
        assert_eq!(c.classes, 3);
        assert_eq!(c.forms, 6);
        assert!(c.stable);
        // the SL_2 count sees (a, b, c) and (2a, b, 2c) as different classes
        assert!(c.sl2_classes > c.classes);
    }
}
