use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::linear::{dot, primitive, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// `c·w + a = 0`
    Equality,
    /// `c·w + a ≥ 0`
    InequalityGe,
}

/// Affine form `c·w + a` over correlation coordinates, read as either an
/// equality or a `≥ 0` inequality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coefficients: Vec<Rational>,
    pub constant: Rational,
    pub kind: FormKind,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>, constant: Rational, kind: FormKind) -> Result<Self> {
        if coefficients.iter().all(Zero::is_zero) {
            return Err(Error::Unsupported("linear form has no nonzero coefficient".into()));
        }
        Ok(LinearForm {
            coefficients,
            constant,
            kind,
        })
    }

    pub fn from_ints(coefficients: &[i64], constant: i64, kind: FormKind) -> Result<Self> {
        LinearForm::new(
            coefficients.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            Rational::from_integer(constant.into()),
            kind,
        )
    }

    pub fn inequality(coefficients: &[i64], constant: i64) -> Self {
        LinearForm::from_ints(coefficients, constant, FormKind::InequalityGe).expect("nonzero inequality")
    }

    pub fn dimension(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_equality(&self) -> bool {
        self.kind == FormKind::Equality
    }

    /// `c·w + a`
    pub fn evaluate(&self, w: &[Rational]) -> Rational {
        dot(&self.coefficients, w) + &self.constant
    }

    pub fn evaluate_int(&self, w: &[i64]) -> Rational {
        let w: Vec<Rational> = w.iter().map(|&x| Rational::from_integer(x.into())).collect();
        self.evaluate(&w)
    }

    /// Whether `w` satisfies the form (exactly).
    pub fn holds(&self, w: &[Rational]) -> bool {
        let v = self.evaluate(w);
        match self.kind {
            FormKind::Equality => v.is_zero(),
            FormKind::InequalityGe => !v.is_negative(),
        }
    }

    /// Integer coefficients with gcd 1; equalities additionally get a
    /// positive leading coefficient, inequalities are only scaled by a
    /// positive factor.
    pub fn canonical(&self) -> LinearForm {
        let mut all = self.coefficients.clone();
        all.push(self.constant.clone());
        let mut ints = primitive(&all);
        if self.kind == FormKind::Equality {
            let lead = ints[..ints.len() - 1]
                .iter()
                .find(|x| !x.is_zero())
                .expect("nonzero coefficient");
            if lead.is_negative() {
                ints.iter_mut().for_each(|x| *x = -x.clone());
            }
        }
        let constant = Rational::from_integer(ints.pop().expect("constant"));
        LinearForm {
            coefficients: ints.into_iter().map(Rational::from_integer).collect(),
            constant,
            kind: self.kind,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonical()
    }

    /// Integer coefficients; `None` unless every entry is integral.
    pub fn integer_coefficients(&self) -> Option<(Vec<BigInt>, BigInt)> {
        if !self.constant.is_integer() || self.coefficients.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some((
            self.coefficients.iter().map(|c| c.to_integer()).collect(),
            self.constant.to_integer(),
        ))
    }

    /// Human-readable rendering using one name per coordinate.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (c, name) in self.coefficients.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != Rational::from_integer(1.into()) {
                out.push_str(&format!("{mag}"));
            }
            out.push_str(name);
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            out.push_str(&format!(" {sign} {}", self.constant.abs()));
        }
        match self.kind {
            FormKind::Equality => out.push_str(" = 0"),
            FormKind::InequalityGe => out.push_str(" >= 0"),
        }
        out
    }

    /// Lexicographic order on (coefficients, constant).
    pub fn lex_cmp(&self, other: &LinearForm) -> Ordering {
        self.coefficients
            .cmp(&other.coefficients)
            .then_with(|| self.constant.cmp(&other.constant))
    }
}

/// Kind first, then [`LinearForm::lex_cmp`].
impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.kind.cmp(&other.kind).then_with(|| self.lex_cmp(other))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dimension()).map(|i| format!("w{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

fn rational_json(r: &Rational) -> serde_json::Value {
    if r.is_integer() {
        if let Some(i) = r.to_integer().to_i64() {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::from(r.to_string())
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<serde_json::Value> = self.coefficients.iter().map(rational_json).collect();
        let mut st = s.serialize_struct("LinearForm", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("coefficients", &coeffs)?;
        st.serialize_field("constant", &rational_json(&self.constant))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_scaling() {
        let f = LinearForm::from_ints(&[-2, 4, 0], -6, FormKind::Equality).unwrap();
        let c = f.canonical();
        assert_eq!(c, LinearForm::from_ints(&[1, -2, 0], 3, FormKind::Equality).unwrap());
        // inequalities keep their orientation
        let g = LinearForm::from_ints(&[-2, 4, 0], -6, FormKind::InequalityGe).unwrap();
        assert_eq!(g.canonical(), LinearForm::inequality(&[-1, 2, 0], -3));
        assert!(LinearForm::from_ints(&[0, 0], 1, FormKind::InequalityGe).is_err());
    }

    #[test]
    fn evaluation_and_rendering() {
        let f = LinearForm::inequality(&[2, -1, 0], 1);
        assert_eq!(f.evaluate_int(&[1, 1, 5]), Rational::from_integer(2.into()));
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert_eq!(f.render(&names), "2a - b + 1 >= 0");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"kind":"inequality_ge","coefficients":[2,-1,0],"constant":1}"#);
    }
}
