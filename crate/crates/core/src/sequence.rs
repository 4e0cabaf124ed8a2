use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{split_top_level, Domain};

/// A finite sequence `s_1, ..., s_n` over one domain instance.
///
/// Indexing through [`Sequence::get`] is 1-based, and any index outside
/// `1..=n` reads as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence<T: Domain> {
    terms: Vec<T>,
    ctx: T::Ctx,
}

impl<T: Domain> Sequence<T> {
    /// Fails if a term belongs to a different domain instance than `ctx`.
    pub fn new(ctx: T::Ctx, terms: Vec<T>) -> Result<Self> {
        if let Some(bad) = terms.iter().find(|t| t.ctx() != ctx) {
            return Err(Error::DescriptorMismatch(
                T::descriptor(&ctx).to_string(),
                T::descriptor(&bad.ctx()).to_string(),
            ));
        }
        Ok(Sequence { terms, ctx })
    }

    pub(crate) fn from_parts(ctx: T::Ctx, terms: Vec<T>) -> Self {
        Sequence { terms, ctx }
    }

    pub fn from_i64s(ctx: T::Ctx, values: &[i64]) -> Self {
        let terms = values.iter().map(|&v| T::from_i64(&ctx, v)).collect();
        Sequence { terms, ctx }
    }

    pub fn empty(ctx: T::Ctx) -> Self {
        Sequence {
            terms: Vec::new(),
            ctx,
        }
    }

    /// Comma-separated terms, e.g. `0,1,1,0` or `(1,2),(0,1)` for `gfp_poly`.
    pub fn parse(ctx: T::Ctx, text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Sequence::empty(ctx));
        }
        let terms = split_top_level(text)?
            .into_iter()
            .map(|t| T::parse_in(&ctx, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Sequence { terms, ctx })
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<T> {
        self.terms
    }

    /// `s_j` for `1 <= j <= n`, zero otherwise.
    pub fn get(&self, j: i64) -> T {
        if j >= 1 && (j as usize) <= self.terms.len() {
            self.terms[j as usize - 1].clone()
        } else {
            T::zero_in(&self.ctx)
        }
    }

    /// `s^(i) = (s_1, ..., s_i)`.
    pub fn prefix(&self, i: usize) -> Self {
        Sequence {
            terms: self.terms[..i.min(self.terms.len())].to_vec(),
            ctx: self.ctx.clone(),
        }
    }

    /// `(s_from, ..., s_to)`, 1-based and inclusive; empty when `from > to`.
    pub fn slice(&self, from: usize, to: usize) -> Self {
        let terms = if from == 0 || from > to || from > self.terms.len() {
            Vec::new()
        } else {
            self.terms[from - 1..to.min(self.terms.len())].to_vec()
        };
        Sequence {
            terms,
            ctx: self.ctx.clone(),
        }
    }

    /// `(s_n, ..., s_1)`.
    pub fn reversed(&self) -> Self {
        Sequence {
            terms: self.terms.iter().rev().cloned().collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn push(&mut self, term: T) {
        self.terms.push(term);
    }

    pub fn is_all_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// Smallest `j` with `s_j != 0`.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.terms.iter().position(|t| !t.is_zero()).map(|i| i + 1)
    }

    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<T: Domain> fmt::Display for Sequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Gf2;

    #[test]
    fn one_based_access() {
        let s = Sequence::<Gf2>::parse((), "0,1,1").unwrap();
        assert_eq!(s.get(0), Gf2::ZERO);
        assert_eq!(s.get(2), Gf2::ONE);
        assert_eq!(s.get(4), Gf2::ZERO);
        assert_eq!(s.get(-3), Gf2::ZERO);
        assert_eq!(s.first_nonzero(), Some(2));
        assert_eq!(s.slice(2, 3).to_text(), "1,1");
        assert_eq!(s.slice(4, 3).len(), 0);
        assert_eq!(s.reversed().to_text(), "1,1,0");
    }
}
