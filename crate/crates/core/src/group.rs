//! Finite groups in additive notation: abelian groups in canonical form and
//! arbitrary finite groups given by Cayley tables.
//!
//! Every group exposes its elements as indices `0..n` with `0` the identity.
//! For abelian groups the index is the mixed-radix rank of the coordinate
//! vector, so the index order is the lexicographic order on coordinates.
//! That fixed total order drives deterministic subset enumeration everywhere
//! downstream.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),
    #[error("factor {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("elements belong to different ambient groups")]
    MismatchedAmbient,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("coordinate count {got} does not match factor count {expected}")]
    CoordinateCount { got: usize, expected: usize },
    #[error("Cayley table is not {n}x{n}")]
    TableShape { n: usize },
    #[error("element 0 is not a two-sided identity: table({i},{j}) = {got}")]
    IdentityViolation { i: usize, j: usize, got: usize },
    #[error("row {row} is not a permutation: value {value} repeated")]
    RowNotPermutation { row: usize, value: usize },
    #[error("column {col} is not a permutation: value {value} repeated")]
    ColNotPermutation { col: usize, value: usize },
    #[error("associativity fails at triple ({i},{j},{k}): ({i}+{j})+{k} = {lhs} but {i}+({j}+{k}) = {rhs}")]
    NotAssociative { i: usize, j: usize, k: usize, lhs: usize, rhs: usize },
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("unknown builtin group tag {0:?}")]
    UnknownBuiltin(String),
    #[error("builtin {tag}({param}) too large: order {order} exceeds limit {limit}")]
    SizeTooLarge { tag: String, param: usize, order: usize, limit: usize },
    #[error("cannot parse Cayley table: {0}")]
    TableParse(String),
    #[error("cannot parse group spec {0:?}")]
    SpecParse(String),
}

/// Largest order for which a full Cayley table is constructed and its axioms
/// checked exhaustively.
pub const MAX_CAYLEY_ORDER: usize = 512;

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Integer partitions of `e`, each partition with parts descending, listed in
/// reverse-lexicographic order ([e] first, [1,1,...,1] last).
pub fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// Isomorphism class of a finite abelian group in primary decomposition:
/// prime-power cyclic factors, grouped by prime ascending, exponents
/// descending within a prime. Two specs are equal iff their canonical factor
/// sequences are equal. The trivial group has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AbelianGroupSpec {
    factors: Vec<u64>,
}

impl AbelianGroupSpec {
    pub fn trivial() -> Self {
        AbelianGroupSpec { factors: Vec::new() }
    }

    /// Build from prime-power factors; sorts into canonical order.
    pub fn new(factors: &[u64]) -> Result<Self, GroupError> {
        let mut keyed = Vec::with_capacity(factors.len());
        for &f in factors {
            if f < 2 {
                return Err(GroupError::InvalidModulus(f));
            }
            let fac = factorize(f);
            if fac.len() != 1 {
                return Err(GroupError::NotPrimePower(f));
            }
            let (p, e) = fac[0];
            keyed.push((p, std::cmp::Reverse(e), f));
        }
        keyed.sort();
        Ok(AbelianGroupSpec { factors: keyed.into_iter().map(|(_, _, f)| f).collect() })
    }

    /// Build from arbitrary moduli >= 2, splitting each into prime-power
    /// factors (Z_m decomposes as the direct sum over its prime powers).
    pub fn from_moduli(moduli: &[u64]) -> Result<Self, GroupError> {
        let mut factors = Vec::new();
        for &m in moduli {
            if m < 2 {
                return Err(GroupError::InvalidModulus(m));
            }
            for (p, e) in factorize(m) {
                factors.push(p.pow(e));
            }
        }
        AbelianGroupSpec::new(&factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// One spec per isomorphism class of abelian groups of the given order,
/// derived from the integer partitions of each prime exponent. Deterministic
/// output order. Order 1 yields the trivial group.
pub fn enumerate_abelian_groups(order: u64) -> Vec<AbelianGroupSpec> {
    if order == 1 {
        return vec![AbelianGroupSpec::trivial()];
    }
    let primes = factorize(order);
    // choices[i] = partitions of the exponent of primes[i]
    let choices: Vec<Vec<Vec<u32>>> = primes.iter().map(|&(_, e)| partitions(e)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; primes.len()];
    loop {
        let mut factors = Vec::new();
        for (i, &(p, _)) in primes.iter().enumerate() {
            for &lambda in &choices[i][pick[i]] {
                factors.push(p.pow(lambda));
            }
        }
        out.push(AbelianGroupSpec::new(&factors).expect("prime powers by construction"));
        // odometer over choice indices
        let mut i = primes.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// An element of an abelian group given by a coordinate vector tied to a
/// factor sequence. Addition is componentwise modular; identity is the
/// all-zero vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    spec: AbelianGroupSpec,
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn new(spec: &AbelianGroupSpec, coords: &[u64]) -> Result<Self, GroupError> {
        if coords.len() != spec.factors.len() {
            return Err(GroupError::CoordinateCount {
                got: coords.len(),
                expected: spec.factors.len(),
            });
        }
        let coords: Vec<u64> =
            coords.iter().zip(&spec.factors).map(|(&c, &n)| c.rem_euclid(n)).collect();
        Ok(GroupElement { spec: spec.clone(), coords })
    }

    pub fn identity(spec: &AbelianGroupSpec) -> Self {
        GroupElement { spec: spec.clone(), coords: vec![0; spec.factors.len()] }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if self.spec != other.spec {
            return Err(GroupError::MismatchedAmbient);
        }
        let coords: Vec<u64> = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(&self.spec.factors)
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect();
        Ok(GroupElement { spec: self.spec.clone(), coords })
    }

    pub fn neg(&self) -> GroupElement {
        let coords: Vec<u64> =
            self.coords.iter().zip(&self.spec.factors).map(|(&a, &n)| (n - a) % n).collect();
        GroupElement { spec: self.spec.clone(), coords }
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// A finite group presented by its full Cayley table over element indices
/// `0..n`, with index 0 the identity. Construction validates the identity
/// law, the Latin-square property, associativity (exhaustively) and the
/// existence of two-sided inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<usize>, // row-major n*n
    inv: Vec<usize>,
    abelian: bool,
    name: String,
}

impl CayleyGroup {
    pub fn from_table(name: &str, n: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if n == 0 || table.len() != n * n {
            return Err(GroupError::TableShape { n });
        }
        for (pos, &v) in table.iter().enumerate() {
            if v >= n {
                return Err(GroupError::IndexOutOfRange { index: v, order: n });
            }
            let _ = pos;
        }
        // identity law
        for i in 0..n {
            if table[i] != i {
                return Err(GroupError::IdentityViolation { i: 0, j: i, got: table[i] });
            }
            if table[i * n] != i {
                return Err(GroupError::IdentityViolation { i, j: 0, got: table[i * n] });
            }
        }
        // Latin square
        for r in 0..n {
            let mut seen = vec![false; n];
            for c in 0..n {
                let v = table[r * n + c];
                if seen[v] {
                    return Err(GroupError::RowNotPermutation { row: r, value: v });
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for r in 0..n {
                let v = table[r * n + c];
                if seen[v] {
                    return Err(GroupError::ColNotPermutation { col: c, value: v });
                }
                seen[v] = true;
            }
        }
        // associativity, exhaustive; reports the first violated triple
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    let lhs = table[ij * n + k];
                    let rhs = table[i * n + table[j * n + k]];
                    if lhs != rhs {
                        return Err(GroupError::NotAssociative { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        // two-sided inverses
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if table[i * n + j] == 0 && table[j * n + i] == 0 {
                    found = Some(j);
                    break;
                }
            }
            inv[i] = found.ok_or(GroupError::NoInverse(i))?;
        }
        let abelian = (0..n).all(|i| (0..n).all(|j| table[i * n + j] == table[j * n + i]));
        Ok(CayleyGroup { n, table, inv, abelian, name: name.to_string() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, i: usize, j: usize) -> Result<usize, GroupError> {
        if i >= self.n {
            return Err(GroupError::IndexOutOfRange { index: i, order: self.n });
        }
        if j >= self.n {
            return Err(GroupError::IndexOutOfRange { index: j, order: self.n });
        }
        Ok(self.table[i * self.n + j])
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Builtin families: `cyclic(n)`, `dihedral(n)` of order 2n, `sym(n)`,
    /// `alt(n)`, `quaternion(m)` the generalized quaternion group of order 4m.
    pub fn builtin(tag: &str, param: usize) -> Result<Self, GroupError> {
        let check = |order: usize| -> Result<(), GroupError> {
            if order == 0 || order > MAX_CAYLEY_ORDER {
                Err(GroupError::SizeTooLarge {
                    tag: tag.to_string(),
                    param,
                    order,
                    limit: MAX_CAYLEY_ORDER,
                })
            } else {
                Ok(())
            }
        };
        match tag {
            "cyclic" => {
                check(param)?;
                let n = param;
                let mut table = vec![0usize; n * n];
                for i in 0..n {
                    for j in 0..n {
                        table[i * n + j] = (i + j) % n;
                    }
                }
                CayleyGroup::from_table(&format!("cyclic{n}"), n, table)
            }
            "dihedral" => {
                let m = param.max(1);
                let n = 2 * m;
                check(n)?;
                // index i + m*s encodes s^s r^i (s = reflection flag)
                let idx = |i: usize, s: usize| i + m * s;
                let mut table = vec![0usize; n * n];
                for i in 0..m {
                    for s in 0..2 {
                        for j in 0..m {
                            for t in 0..2 {
                                // (s^s r^i)(s^t r^j): move r^i past s^t
                                let (ri, rs) = if t == 0 {
                                    ((i + j) % m, s)
                                } else {
                                    (((m + j) - i % m) % m, 1 - s)
                                };
                                table[idx(i, s) * n + idx(j, t)] = idx(ri, rs);
                            }
                        }
                    }
                }
                CayleyGroup::from_table(&format!("dihedral{m}"), n, table)
            }
            "sym" | "alt" => {
                let perms = permutations(param, tag == "alt");
                let n = perms.len();
                check(n)?;
                let rank: std::collections::HashMap<Vec<usize>, usize> =
                    perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
                let mut table = vec![0usize; n * n];
                for (i, a) in perms.iter().enumerate() {
                    for (j, b) in perms.iter().enumerate() {
                        // (a+b)(x) = a(b(x))
                        let prod: Vec<usize> = (0..param).map(|x| a[b[x]]).collect();
                        table[i * n + j] = rank[&prod];
                    }
                }
                CayleyGroup::from_table(&format!("{tag}{param}"), n, table)
            }
            "quaternion" => {
                let m = param;
                if m < 2 {
                    return Err(GroupError::UnknownBuiltin(format!("quaternion({m}): need m >= 2")));
                }
                let n = 4 * m;
                check(n)?;
                // index i + 2m*j encodes a^i b^j with a^(2m)=e, b^2=a^m, b a b^-1 = a^-1
                let idx = |i: usize, j: usize| i + 2 * m * j;
                let mut table = vec![0usize; n * n];
                for i in 0..2 * m {
                    for j in 0..2 {
                        for k in 0..2 * m {
                            for l in 0..2 {
                                // (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l), b^2 = a^m
                                let e1 = if j == 0 { (i + k) % (2 * m) } else { (i + 2 * m - k % (2 * m)) % (2 * m) };
                                let (e1, e2) = if j + l == 2 { ((e1 + m) % (2 * m), 0) } else { (e1, j + l) };
                                table[idx(i, j) * n + idx(k, l)] = idx(e1, e2);
                            }
                        }
                    }
                }
                CayleyGroup::from_table(&format!("quaternion{m}"), n, table)
            }
            _ => Err(GroupError::UnknownBuiltin(tag.to_string())),
        }
    }

    /// Export an abelian group as an explicit Cayley table.
    pub fn from_abelian(moduli: &[u64]) -> Result<Self, GroupError> {
        let g = Group::abelian(moduli)?;
        let n = g.order();
        if n > MAX_CAYLEY_ORDER {
            return Err(GroupError::SizeTooLarge {
                tag: "abelian".into(),
                param: n,
                order: n,
                limit: MAX_CAYLEY_ORDER,
            });
        }
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = g.op(i, j);
            }
        }
        CayleyGroup::from_table(&g.id(), n, table)
    }

    /// Text format: line 1 = n; lines 2..n+1 = the n rows of the table.
    /// Element 0 must be the identity.
    pub fn parse(name: &str, text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| GroupError::TableParse("empty input".into()))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| GroupError::TableParse(format!("bad order line {first:?}")))?;
        let mut table = Vec::with_capacity(n * n);
        for (rowno, line) in lines.enumerate() {
            if rowno >= n {
                return Err(GroupError::TableParse(format!("more than {n} rows")));
            }
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| GroupError::TableParse(format!("bad entry {tok:?} in row {rowno}")))?;
                table.push(v);
            }
        }
        if table.len() != n * n {
            return Err(GroupError::TableParse(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        CayleyGroup::from_table(name, n, table)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for r in 0..self.n {
            let row: Vec<String> =
                (0..self.n).map(|c| self.table[r * self.n + c].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn permutations(k: usize, even_only: bool) -> Vec<Vec<usize>> {
    fn sign(p: &[usize]) -> i32 {
        let mut s = 1;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    s = -s;
                }
            }
        }
        s
    }
    let mut items: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    // lexicographic generation keeps the identity first
    loop {
        if !even_only || sign(&items) == 1 {
            out.push(items.clone());
        }
        // next lexicographic permutation
        let Some(i) = (0..items.len().saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1])
        else {
            break;
        };
        let j = (i + 1..items.len()).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
    out
}

/// A finite group handle: either an abelian group given by a modulus list or
/// an arbitrary group given by a Cayley table. Immutable after construction
/// and safe to share across workers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    Abelian { moduli: Vec<u64>, strides: Vec<u64> },
    Cayley(CayleyGroup),
}

impl Group {
    /// Abelian group as a direct sum of cyclic groups of the given moduli,
    /// in the given order (e.g. `[12]` keeps residue arithmetic mod 12).
    pub fn abelian(moduli: &[u64]) -> Result<Self, GroupError> {
        for &m in moduli {
            if m < 2 {
                return Err(GroupError::InvalidModulus(m));
            }
        }
        let mut strides = vec![1u64; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        Ok(Group::Abelian { moduli: moduli.to_vec(), strides })
    }

    pub fn cyclic(v: u64) -> Self {
        Group::abelian(&[v]).expect("v >= 2")
    }

    pub fn from_spec(spec: &AbelianGroupSpec) -> Self {
        if spec.factors().is_empty() {
            Group::Abelian { moduli: Vec::new(), strides: Vec::new() }
        } else {
            Group::abelian(spec.factors()).expect("canonical factors are >= 2")
        }
    }

    pub fn spec(&self) -> Option<AbelianGroupSpec> {
        match self {
            Group::Abelian { moduli, .. } => {
                if moduli.is_empty() {
                    Some(AbelianGroupSpec::trivial())
                } else {
                    Some(AbelianGroupSpec::from_moduli(moduli).expect("valid moduli"))
                }
            }
            Group::Cayley(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Group::Abelian { moduli, .. } => moduli.iter().product::<u64>() as usize,
            Group::Cayley(c) => c.order(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            Group::Abelian { .. } => true,
            Group::Cayley(c) => c.is_abelian(),
        }
    }

    pub fn coords_of(&self, index: usize) -> Vec<u64> {
        match self {
            Group::Abelian { moduli, strides } => {
                let mut rest = index as u64;
                moduli
                    .iter()
                    .zip(strides)
                    .map(|(&m, &s)| {
                        let c = rest / s;
                        rest %= s;
                        debug_assert!(c < m);
                        c
                    })
                    .collect()
            }
            Group::Cayley(_) => vec![index as u64],
        }
    }

    pub fn index_of(&self, coords: &[u64]) -> Result<usize, GroupError> {
        match self {
            Group::Abelian { moduli, strides } => {
                if coords.len() != moduli.len() {
                    return Err(GroupError::CoordinateCount {
                        got: coords.len(),
                        expected: moduli.len(),
                    });
                }
                let mut idx = 0u64;
                for ((&c, &m), &s) in coords.iter().zip(moduli).zip(strides) {
                    idx += (c % m) * s;
                }
                Ok(idx as usize)
            }
            Group::Cayley(c) => {
                let i = coords.first().copied().unwrap_or(0) as usize;
                if i >= c.order() {
                    return Err(GroupError::IndexOutOfRange { index: i, order: c.order() });
                }
                Ok(i)
            }
        }
    }

    /// Group operation on element indices. Left-to-right accumulation of
    /// orderings uses this directly, so the nonabelian case is well-defined.
    pub fn op(&self, a: usize, b: usize) -> usize {
        match self {
            Group::Abelian { moduli, strides } => {
                let mut ra = a as u64;
                let mut rb = b as u64;
                let mut idx = 0u64;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let ca = ra / s;
                    ra %= s;
                    let cb = rb / s;
                    rb %= s;
                    idx += ((ca + cb) % m) * s;
                }
                idx as usize
            }
            Group::Cayley(c) => c.op(a, b).expect("indices in range"),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        match self {
            Group::Abelian { moduli, strides } => {
                let mut ra = a as u64;
                let mut idx = 0u64;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let ca = ra / s;
                    ra %= s;
                    idx += ((m - ca) % m) * s;
                }
                idx as usize
            }
            Group::Cayley(c) => c.inv(a),
        }
    }

    /// Sum of the slice in left-to-right order (identity for an empty slice).
    pub fn sum(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &e| self.op(acc, e))
    }

    /// Stable identifier used in reports.
    pub fn id(&self) -> String {
        match self {
            Group::Abelian { moduli, .. } => {
                if moduli.is_empty() {
                    "Z1".to_string()
                } else {
                    moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
                }
            }
            Group::Cayley(c) => c.name().to_string(),
        }
    }

    /// Human-readable element label: the residue for rank-1 abelian groups, a
    /// coordinate tuple otherwise, the bare index for Cayley groups.
    pub fn label(&self, index: usize) -> String {
        match self {
            Group::Abelian { moduli, .. } => {
                if moduli.len() == 1 || moduli.is_empty() {
                    index.to_string()
                } else {
                    let c = self.coords_of(index);
                    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            }
            Group::Cayley(_) => index.to_string(),
        }
    }

    /// All nonidentity element indices in ambient order.
    pub fn nonidentity(&self) -> Vec<usize> {
        (1..self.order()).collect()
    }
}

/// Parse a group spec string like "Z25", "Z_25", "Z4xZ2" or "Z4+Z2".
pub fn parse_group_spec(s: &str) -> Result<Group, GroupError> {
    let mut moduli = Vec::new();
    for part in s.split(['x', 'X', '+', '*']) {
        let p = part.trim().trim_start_matches(['Z', 'z']).trim_start_matches('_');
        let m: u64 = p.parse().map_err(|_| GroupError::SpecParse(s.to_string()))?;
        moduli.push(m);
    }
    if moduli.is_empty() {
        return Err(GroupError::SpecParse(s.to_string()));
    }
    Group::abelian(&moduli)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_counts_match_partition_products() {
        // number of abelian groups of order n = prod over p^e || n of p(e)
        for n in 1..=27u64 {
            let got = enumerate_abelian_groups(n).len();
            let want: usize =
                factorize(n).iter().map(|&(_, e)| partitions(e).len()).product::<usize>().max(1);
            assert_eq!(got, want, "order {n}");
        }
    }

    #[test]
    fn enumerate_examples() {
        let g8 = enumerate_abelian_groups(8);
        assert_eq!(g8.len(), 3);
        let names: Vec<String> = g8.iter().map(|s| s.to_string()).collect();
        assert!(names.contains(&"Z8".to_string()));
        assert!(names.contains(&"Z4xZ2".to_string()));
        assert!(names.contains(&"Z2xZ2xZ2".to_string()));

        assert_eq!(enumerate_abelian_groups(1), vec![AbelianGroupSpec::trivial()]);

        let g12 = enumerate_abelian_groups(12);
        let names: Vec<String> = g12.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["Z4xZ3".to_string(), "Z2xZ2xZ3".to_string()]);
    }

    #[test]
    fn element_add_examples() {
        let z25 = Group::cyclic(25);
        assert_eq!(z25.op(13, 12), 0);
        assert_eq!(z25.op(1, 3), 4);

        let g = Group::abelian(&[4, 2]).unwrap();
        let a = g.index_of(&[3, 1]).unwrap();
        let b = g.index_of(&[1, 1]).unwrap();
        assert_eq!(g.op(a, b), 0);
    }

    #[test]
    fn group_element_value_semantics() {
        let spec = AbelianGroupSpec::new(&[4, 2]).unwrap();
        let a = GroupElement::new(&spec, &[3, 1]).unwrap();
        let b = GroupElement::new(&spec, &[1, 1]).unwrap();
        assert!(a.add(&b).unwrap().is_identity());
        assert_eq!(a.neg(), b);
        let other = AbelianGroupSpec::new(&[8]).unwrap();
        let c = GroupElement::new(&other, &[1]).unwrap();
        assert_eq!(a.add(&c), Err(GroupError::MismatchedAmbient));
    }

    #[test]
    fn spec_canonical_form() {
        assert_eq!(
            AbelianGroupSpec::from_moduli(&[12]).unwrap(),
            AbelianGroupSpec::new(&[3, 4]).unwrap()
        );
        assert_eq!(AbelianGroupSpec::from_moduli(&[12]).unwrap().to_string(), "Z4xZ3");
        assert!(AbelianGroupSpec::new(&[6]).is_err());
        assert!(AbelianGroupSpec::new(&[1]).is_err());
    }

    #[test]
    fn sym3_is_valid_and_nonabelian() {
        let g = CayleyGroup::builtin("sym", 3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // identity law and involutions: transpositions square to the identity
        for t in 0..6 {
            assert_eq!(g.op(0, t).unwrap(), t);
        }
        let involutions: Vec<usize> = (1..6).filter(|&t| g.op(t, t).unwrap() == 0).collect();
        assert_eq!(involutions.len(), 3);
        // the two 3-cycles are mutually inverse
        let cycles: Vec<usize> = (1..6).filter(|&t| g.op(t, t).unwrap() != 0).collect();
        assert_eq!(cycles.len(), 2);
        assert_eq!(g.op(cycles[0], cycles[1]).unwrap(), 0);
    }

    #[test]
    fn builtin_cyclic_matches_abelian_arithmetic() {
        let c = CayleyGroup::builtin("cyclic", 5).unwrap();
        let z5 = Group::cyclic(5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(c.op(i, j).unwrap(), z5.op(i, j));
            }
        }
    }

    #[test]
    fn builtin_dihedral4_order8_nonabelian() {
        let d = CayleyGroup::builtin("dihedral", 4).unwrap();
        assert_eq!(d.order(), 8);
        assert!(!d.is_abelian());
    }

    #[test]
    fn builtin_quaternion8() {
        let q = CayleyGroup::builtin("quaternion", 2).unwrap();
        assert_eq!(q.order(), 8);
        assert!(!q.is_abelian());
        // exactly one involution (the central element a^m)
        let inv: Vec<usize> = (1..8).filter(|&t| q.op(t, t).unwrap() == 0).collect();
        assert_eq!(inv.len(), 1);
    }

    #[test]
    fn cayley_roundtrip_abelian() {
        let spec = AbelianGroupSpec::from_moduli(&[4, 2]).unwrap();
        let cayley = CayleyGroup::from_abelian(spec.factors()).unwrap();
        let reparsed = CayleyGroup::parse("roundtrip", &cayley.serialize()).unwrap();
        let g = Group::from_spec(&spec);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(reparsed.op(i, j).unwrap(), g.op(i, j));
            }
        }
        assert!(reparsed.is_abelian());
    }

    #[test]
    fn loader_rejects_bad_tables() {
        // 0 not identity
        let bad = "2\n1 0\n0 1\n";
        assert!(matches!(
            CayleyGroup::parse("bad", bad),
            Err(GroupError::IdentityViolation { .. })
        ));
        // Z4 table with one cell corrupted: no longer a Latin square
        let bad2 = "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 1\n";
        assert!(CayleyGroup::parse("bad2", bad2).is_err());
    }

    #[test]
    fn axioms_hold_on_builtins() {
        for (tag, param) in
            [("cyclic", 7), ("dihedral", 3), ("dihedral", 5), ("sym", 4), ("alt", 4), ("quaternion", 3)]
        {
            // from_table would have rejected the group otherwise; spot-check inverses
            let g = CayleyGroup::builtin(tag, param).unwrap();
            for i in 0..g.order() {
                let j = g.inv(i);
                assert_eq!(g.op(i, j).unwrap(), 0);
                assert_eq!(g.op(j, i).unwrap(), 0);
            }
        }
    }

    #[test]
    fn parse_group_spec_strings() {
        assert_eq!(parse_group_spec("Z25").unwrap().order(), 25);
        assert_eq!(parse_group_spec("Z_25").unwrap().order(), 25);
        assert_eq!(parse_group_spec("Z4xZ2").unwrap().order(), 8);
        assert!(parse_group_spec("bogus").is_err());
    }

    #[test]
    fn trivial_group_supported() {
        let specs = enumerate_abelian_groups(1);
        let g = Group::from_spec(&specs[0]);
        assert_eq!(g.order(), 1);
        assert!(g.nonidentity().is_empty());
    }
}
