//! Monomial ideals in canonical minimal-generator form.

use crate::exponent::ExponentVector;
use crate::order::TermOrder;
use serde::Serialize;

/// A monomial ideal stored by its unique minimal generating set, sorted
/// ascending under the default order. The unit ideal is a dedicated flag,
/// never the generator 1; the zero ideal is the empty generator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<ExponentVector>,
    unit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("zero exponent vector: the unit ideal is not a valid generator input")]
    UnitGenerator,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("colon ideal must be generated by variables")]
    NonVariableColon,
    #[error("variable index {0} out of range")]
    BadVariable(usize),
}

/// For each variable, the minimal e with x_k^e in the ideal, when one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurePowerProfile {
    pub exponents: Vec<Option<u32>>,
}

impl MonomialIdeal {
    /// Canonicalize a generating set: drop every generator divisible by
    /// another one. Zero vectors are rejected.
    pub fn minimal_generators<I>(num_vars: usize, gens: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut list: Vec<ExponentVector> = Vec::new();
        for g in gens {
            assert_eq!(g.len(), num_vars, "generator arity mismatch");
            if g.is_zero() {
                return Err(IdealError::UnitGenerator);
            }
            list.push(g);
        }
        Ok(Self::minimalize(num_vars, list))
    }

    fn minimalize(num_vars: usize, mut list: Vec<ExponentVector>) -> Self {
        list.sort_by(|a, b| TermOrder::DegRevLexReversed.compare(a, b));
        list.dedup();
        let mut keep: Vec<ExponentVector> = Vec::with_capacity(list.len());
        'outer: for g in list {
            // earlier entries have lower or equal degree, so only they can divide g
            for k in &keep {
                if k.divides(&g) {
                    continue 'outer;
                }
            }
            keep.push(g);
        }
        MonomialIdeal {
            num_vars,
            generators: keep,
            unit: false,
        }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: Vec::new(),
            unit: false,
        }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: Vec::new(),
            unit: true,
        }
    }

    pub(crate) fn from_raw(num_vars: usize, gens: Vec<ExponentVector>) -> Self {
        if gens.iter().any(|g| g.is_zero()) {
            return MonomialIdeal::unit(num_vars);
        }
        Self::minimalize(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.unit && !self.generators.is_empty()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn min_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.degree())
            .min()
            .unwrap_or(0)
    }

    fn check_var(&self, var: usize) -> Result<(), IdealError> {
        if var >= 1 && var <= self.num_vars {
            Ok(())
        } else {
            Err(IdealError::BadVariable(var))
        }
    }

    /// Membership of a monomial.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        if self.unit {
            return true;
        }
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        if self.unit {
            return true;
        }
        if other.unit {
            return false;
        }
        other.generators.iter().all(|g| self.contains(g))
    }

    /// I : x_k (one power).
    pub fn colon_variable(&self, var: usize) -> Result<MonomialIdeal, IdealError> {
        self.check_var(var)?;
        if self.unit {
            return Ok(MonomialIdeal::unit(self.num_vars));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.exponent_of(var) > 0 {
                    let mut e = g.entries().to_vec();
                    e[var - 1] -= 1;
                    ExponentVector::new(e)
                } else {
                    g.clone()
                }
            })
            .collect();
        Ok(MonomialIdeal::from_raw(self.num_vars, gens))
    }

    /// I : w for a monomial w, via the gcd formula ⟨ g / gcd(g, w) ⟩.
    pub fn colon_monomial(&self, w: &ExponentVector) -> MonomialIdeal {
        if self.unit {
            return MonomialIdeal::unit(self.num_vars);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.div(&g.gcd(w)).expect("gcd divides"))
            .collect();
        MonomialIdeal::from_raw(self.num_vars, gens)
    }

    /// I : x_k^∞, by zeroing the k-th exponent of every minimal generator.
    pub fn colon_by_variable_power(&self, var: usize) -> Result<MonomialIdeal, IdealError> {
        self.check_var(var)?;
        if self.unit {
            return Ok(MonomialIdeal::unit(self.num_vars));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.without_variable(var))
            .collect();
        Ok(MonomialIdeal::from_raw(self.num_vars, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if self.unit {
            return other.clone();
        }
        if other.unit {
            return self.clone();
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::from_raw(self.num_vars, gens)
    }

    /// I : J^∞ for J generated by the given variables, iterating
    /// I : J = ∩_v (I : x_v) until stable.
    pub fn colon_by_ideal_power(&self, vars: &[usize]) -> Result<MonomialIdeal, IdealError> {
        for &v in vars {
            self.check_var(v)?;
        }
        if vars.is_empty() {
            return Err(IdealError::NonVariableColon);
        }
        let mut current = self.clone();
        loop {
            let mut next: Option<MonomialIdeal> = None;
            for &v in vars {
                let colon = current.colon_variable(v)?;
                next = Some(match next {
                    None => colon,
                    Some(acc) => acc.intersect(&colon),
                });
            }
            let next = next.unwrap();
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Saturation with respect to the maximal ideal, I : ⟨x₁,…,x_n⟩^∞.
    pub fn saturation(&self) -> MonomialIdeal {
        let vars: Vec<usize> = (1..=self.num_vars).collect();
        self.colon_by_ideal_power(&vars)
            .expect("maximal ideal is variable generated")
    }

    /// ⟨I, x_{v} : v ∈ vars⟩.
    pub fn plus_variables(&self, vars: &[usize]) -> MonomialIdeal {
        if self.unit {
            return self.clone();
        }
        let mut gens = self.generators.clone();
        for &v in vars {
            gens.push(ExponentVector::variable(self.num_vars, v));
        }
        MonomialIdeal::from_raw(self.num_vars, gens)
    }

    /// Krull dimension of P/I: the maximal size of a variable subset S such
    /// that no minimal generator is supported inside S.
    pub fn dimension(&self) -> Result<usize, IdealError> {
        if self.unit {
            return Err(IdealError::UnitIdeal);
        }
        if self.generators.is_empty() {
            return Err(IdealError::ZeroIdeal);
        }
        let n = self.num_vars;
        let mut best = 0usize;
        for mask in 0u32..(1u32 << n) {
            let vars: Vec<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
            if vars.len() <= best {
                continue;
            }
            if !self.generators.iter().any(|g| g.supported_within(&vars)) {
                best = vars.len();
            }
        }
        Ok(best)
    }

    pub fn pure_power_profile(&self) -> PurePowerProfile {
        let exponents = (1..=self.num_vars)
            .map(|var| {
                self.generators
                    .iter()
                    .filter(|g| g.class() == Some(var) && g.degree() == g.exponent_of(var))
                    .map(|g| g.exponent_of(var))
                    .min()
            })
            .collect();
        PurePowerProfile { exponents }
    }

    /// Count of degree-d monomials lying in the ideal, by enumeration.
    pub fn count_monomials_of_degree(&self, d: u32) -> usize {
        crate::exponent::monomials_of_degree(self.num_vars, d)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimal_generators(n, gens.iter().map(|g| ev(g))).unwrap()
    }

    #[test]
    fn minimalization() {
        // x² divides x²y
        let i = ideal(2, &[&[2, 0], &[2, 1], &[0, 2]]);
        assert_eq!(i.generators(), &[ev(&[2, 0]), ev(&[0, 2])]);
        // the degree-two maximal-ideal power in three variables is minimal as given
        let m2 = ideal(
            3,
            &[&[0, 0, 2], &[0, 1, 1], &[0, 2, 0], &[1, 0, 1], &[1, 1, 0], &[2, 0, 0]],
        );
        assert_eq!(m2.generators().len(), 6);
        let single = ideal(2, &[&[3, 1]]);
        assert_eq!(single.generators().len(), 1);
    }

    #[test]
    fn unit_generator_rejected() {
        let err = MonomialIdeal::minimal_generators(2, vec![ev(&[0, 0])]).unwrap_err();
        assert_eq!(err, IdealError::UnitGenerator);
    }

    #[test]
    fn colon_by_variable_power_examples() {
        // ⟨x², y²⟩ : x^∞ saturates to the unit ideal
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(i.colon_by_variable_power(1).unwrap().is_unit());
        // ⟨xz, y²⟩ : x^∞ = ⟨z, y²⟩
        let j = ideal(3, &[&[1, 0, 1], &[0, 2, 0]]);
        let sat = j.colon_by_variable_power(1).unwrap();
        assert_eq!(sat, ideal(3, &[&[0, 0, 1], &[0, 2, 0]]));
        // untouched variable: identity
        assert!(i.colon_by_variable_power(2).unwrap().is_unit());
        let k = ideal(3, &[&[0, 2, 0]]);
        assert_eq!(k.colon_by_variable_power(1).unwrap(), k);
    }

    #[test]
    fn iterated_colon_agrees_with_exponent_stripping() {
        // brute force I : x^∞ by iterating single colons
        let i = ideal(3, &[&[1, 0, 1], &[0, 2, 0]]);
        let mut brute = i.clone();
        loop {
            let next = brute.colon_variable(1).unwrap();
            if next == brute {
                break;
            }
            brute = next;
        }
        assert_eq!(brute, i.colon_by_variable_power(1).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(i.colon_by_ideal_power(&[1, 2]).unwrap().is_unit());
        let j = ideal(3, &[&[1, 0, 1]]);
        assert_eq!(
            j.colon_by_ideal_power(&[3]).unwrap(),
            ideal(3, &[&[1, 0, 0]])
        );
        // the leading ideal of the Gorenstein fixture is artinian
        let lt = ideal(
            3,
            &[&[2, 0, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]],
        );
        assert!(lt.saturation().is_unit());
        // a prime ideal is saturated
        let p = ideal(2, &[&[0, 1]]);
        assert_eq!(p.saturation(), p);
    }

    #[test]
    fn dimension_rejects_zero_and_unit() {
        assert_eq!(
            MonomialIdeal::zero(2).dimension().unwrap_err(),
            IdealError::ZeroIdeal
        );
        assert_eq!(
            MonomialIdeal::unit(2).dimension().unwrap_err(),
            IdealError::UnitIdeal
        );
    }

    #[test]
    fn dimension_examples() {
        let m2 = ideal(
            3,
            &[&[0, 0, 2], &[0, 1, 1], &[0, 2, 0], &[1, 0, 1], &[1, 1, 0], &[2, 0, 0]],
        );
        assert_eq!(m2.dimension().unwrap(), 0);
        let j = ideal(3, &[&[1, 0, 1], &[0, 2, 0]]);
        assert_eq!(j.dimension().unwrap(), 1);
        let p = ideal(2, &[&[0, 1]]);
        assert_eq!(p.dimension().unwrap(), 1);
    }

    #[test]
    fn pure_powers() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[1, 0, 1]]);
        let profile = i.pure_power_profile();
        assert_eq!(profile.exponents, vec![Some(2), Some(3), None]);
    }
}
