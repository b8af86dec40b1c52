use alloc::vec::Vec;

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// A ring homomorphism sending each base variable to a monomial. Variables
/// without an explicit image are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialMap {
    images: Vec<Option<Monomial>>,
}

impl MonomialMap {
    pub fn identity() -> Self {
        MonomialMap::default()
    }

    pub fn set(&mut self, index: usize, image: Monomial) {
        if self.images.len() <= index {
            self.images.resize(index + 1, None);
        }
        self.images[index] = Some(image);
    }

    pub fn with(mut self, index: usize, image: Monomial) -> Self {
        self.set(index, image);
        self
    }

    pub fn image(&self, index: usize) -> Option<&Monomial> {
        self.images.get(index).and_then(|m| m.as_ref())
    }

    pub fn apply(&self, m: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        let mut fixed = Vec::with_capacity(m.exponents().len());
        for (i, &e) in m.exponents().iter().enumerate() {
            match self.image(i) {
                Some(img) if e != 0 => {
                    fixed.push(0);
                    out = out.mul(&img.pow(e));
                }
                Some(_) => fixed.push(0),
                None => fixed.push(e),
            }
        }
        out.mul(&Monomial::from_exponents(fixed))
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> LaurentPoly {
        p.map_monomials(|m| self.apply(m))
    }

    /// `other` applied after `self`.
    pub fn then(&self, other: &MonomialMap) -> MonomialMap {
        let len = self.images.len().max(other.images.len());
        let mut out = MonomialMap::identity();
        for i in 0..len {
            let first = self
                .image(i)
                .cloned()
                .unwrap_or_else(|| Monomial::var(i, 1));
            let composed = other.apply(&first);
            if composed != Monomial::var(i, 1) {
                out.set(i, composed);
            }
        }
        out
    }
}
