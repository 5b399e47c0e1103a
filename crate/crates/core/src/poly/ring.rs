use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::PolyError;

/// Shape of a monomial ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    GrLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Lex => f.write_str("lex"),
            OrderKind::GrLex => f.write_str("grlex"),
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "grlex" | "deglex" => Ok(OrderKind::GrLex),
            other => Err(PolyError::UnknownOrdering(other.to_string())),
        }
    }
}

/// A monomial ordering: a kind plus a precedence over the ring variables.
///
/// `precedence[0]` is the most significant variable. The identity
/// precedence is stored as `None` so the common case compares exponent
/// slices directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            precedence: None,
        }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn grlex() -> Self {
        Self::new(OrderKind::GrLex)
    }

    /// Ordering with an explicit precedence, given as a permutation of
    /// `0..nvars`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; precedence.len()];
        for &p in &precedence {
            if p >= seen.len() || seen[p] {
                return Err(PolyError::BadPrecedence);
            }
            seen[p] = true;
        }
        let identity = precedence.iter().enumerate().all(|(i, &p)| i == p);
        Ok(MonomialOrder {
            kind,
            precedence: if identity { None } else { Some(precedence) },
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// The precedence as a full permutation of `0..nvars`.
    pub fn precedence(&self, nvars: usize) -> Vec<usize> {
        match &self.precedence {
            Some(p) => p.clone(),
            None => (0..nvars).collect(),
        }
    }

    fn cmp_lex(&self, a: &[u16], b: &[u16]) -> Ordering {
        match &self.precedence {
            None => a.cmp(b),
            Some(prec) => {
                for &v in prec {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a.exponents(), b.exponents()),
            OrderKind::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.cmp_lex(a.exponents(), b.exponents())),
        }
    }
}

/// A polynomial ring `Q[v_1, ..., v_n]` together with its monomial ordering.
///
/// Polynomials keep their terms sorted by the ring's ordering, so changing
/// the ordering means moving polynomials into a new ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

pub(crate) fn valid_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], order: MonomialOrder) -> Result<RingRef, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_variable_name(n) {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        if let Some(p) = &order.precedence {
            if p.len() != names.len() {
                return Err(PolyError::BadPrecedence);
            }
        }
        Ok(Arc::new(Ring { names, order }))
    }

    /// Lex ring whose precedence is the declaration order.
    pub fn lex<S: AsRef<str>>(names: &[S]) -> Result<RingRef, PolyError> {
        Self::new(names, MonomialOrder::lex())
    }

    pub fn grlex<S: AsRef<str>>(names: &[S]) -> Result<RingRef, PolyError> {
        Self::new(names, MonomialOrder::grlex())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Same variables, different ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef, PolyError> {
        Ring::new(&self.names, order)
    }

    /// A variable name not used in this ring, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    /// This ring with a fresh variable adjoined as the most significant
    /// variable of the ordering. Returns the new ring and the fresh name.
    pub fn adjoin_first(&self, stem: &str) -> (RingRef, String) {
        let fresh = self.fresh_name(stem);
        let mut names = self.names.clone();
        names.push(fresh.clone());
        let n = self.nvars();
        let mut prec = vec![n];
        prec.extend(self.order.precedence(n));
        let order = MonomialOrder::with_precedence(self.order.kind, prec)
            .expect("permutation by construction");
        (Ring::new(&names, order).expect("fresh name"), fresh)
    }

    /// This ring with a fresh variable adjoined as the least significant
    /// variable of the ordering.
    pub fn adjoin_last(&self, stem: &str) -> (RingRef, String) {
        let fresh = self.fresh_name(stem);
        let mut names = self.names.clone();
        names.push(fresh.clone());
        let n = self.nvars();
        let mut prec = self.order.precedence(n);
        prec.push(n);
        let order = MonomialOrder::with_precedence(self.order.kind, prec)
            .expect("permutation by construction");
        (Ring::new(&names, order).expect("fresh name"), fresh)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
