//! Character degree sets: closed-form families, tabulated groups read from a
//! line-oriented data file, and direct products.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;

use crate::arith;
use crate::error::{Error, Result};

/// Degree table shipped with the crate.
pub const DEFAULT_DATA: &str = include_str!("../data/groups.txt");

/// A set of character degrees. Always contains 1 (the trivial character).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSet(BTreeSet<u64>);

impl DegreeSet {
    /// Collects degrees, adding 1 if absent. Zero is rejected.
    pub fn new(degrees: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::from([1]);
        for d in degrees {
            if d == 0 {
                return Err(Error::Domain("character degree 0".into()));
            }
            set.insert(d);
        }
        Ok(DegreeSet(set))
    }

    pub fn trivial() -> Self {
        DegreeSet(BTreeSet::from([1]))
    }

    pub fn contains(&self, d: u64) -> bool {
        self.0.contains(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> u64 {
        *self.0.last().expect("degree sets contain 1")
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

impl fmt::Debug for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// Where a degree set comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    Psl2 { q: u64 },
    /// `Sz(q2)` with `q2 = 2^(2m+1)`.
    Suzuki { q2: u64 },
    Tabulated { name: String },
    Product(Vec<GroupDescriptor>),
    /// A degree set with no certified realising group.
    Synthetic { name: String, degrees: DegreeSet },
}

impl GroupDescriptor {
    pub fn is_synthetic(&self) -> bool {
        match self {
            GroupDescriptor::Synthetic { .. } => true,
            GroupDescriptor::Product(fs) => fs.iter().any(|f| f.is_synthetic()),
            _ => false,
        }
    }

    /// Degree set of the described group, looking tabulated names up in `table`.
    pub fn degrees(&self, table: &DegreeTable) -> Result<DegreeSet> {
        match self {
            GroupDescriptor::Psl2 { q } => cd_psl2(*q),
            GroupDescriptor::Suzuki { q2 } => cd_suzuki(*q2),
            GroupDescriptor::Tabulated { name } => table.get(name).map(|g| g.degrees.clone()),
            GroupDescriptor::Product(fs) => {
                let sets = fs.iter().map(|f| f.degrees(table)).collect::<Result<Vec<_>>>()?;
                cd_product(&sets)
            }
            GroupDescriptor::Synthetic { degrees, .. } => Ok(degrees.clone()),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Psl2 { q } => write!(f, "PSL2({q})"),
            GroupDescriptor::Suzuki { q2 } => write!(f, "Sz({q2})"),
            GroupDescriptor::Tabulated { name } => write!(f, "{name}"),
            GroupDescriptor::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(g, GroupDescriptor::Product(_)) {
                        write!(f, "({g})")?;
                    } else {
                        write!(f, "{g}")?;
                    }
                }
                Ok(())
            }
            GroupDescriptor::Synthetic { name, degrees } => write!(f, "{name}[synthetic cd={degrees}]"),
        }
    }
}

/// Degrees of `PSL2(q)`. Even `q`: `{1, q-1, q, q+1}`; odd `q` adds
/// `(q+e)/2` with `e = (-1)^((q-1)/2)`. `PSL2(5)` has no character of
/// degree `q+1`, so its set is `{1, 3, 4, 5}`.
pub fn cd_psl2(q: u64) -> Result<DegreeSet> {
    if q < 4 {
        return Err(Error::Domain(format!("PSL2(q) needs q >= 4, got {q}")));
    }
    if arith::is_prime_power(q).is_none() {
        return Err(Error::Domain(format!("{q} is not a prime power")));
    }
    let mut d = vec![q - 1, q];
    if q != 5 {
        d.push(q + 1);
    }
    if q % 2 == 1 {
        let extra = if ((q - 1) / 2).is_multiple_of(2) { q.div_ceil(2) } else { (q - 1) / 2 };
        d.push(extra);
    }
    DegreeSet::new(d)
}

/// Degrees of the Suzuki group `Sz(q2)`, `q2 = 2^(2m+1)`, `m >= 1`:
/// `1, q2^2, q2^2+1, (q2-1)(q2-r+1), (q2-1)(q2+r+1), 2^m (q2-1)` with
/// `r = 2^(m+1)`.
pub fn cd_suzuki(q2: u64) -> Result<DegreeSet> {
    let bad = || Error::Domain(format!("Sz(q2) needs q2 = 2^(2m+1) with m >= 1 and q2 <= 2^31, got {q2}"));
    if !q2.is_power_of_two() || q2 > 1 << 31 {
        return Err(bad());
    }
    let e = q2.trailing_zeros();
    if e < 3 || e.is_multiple_of(2) {
        return Err(bad());
    }
    let m = (e - 1) / 2;
    let r = 1u64 << (m + 1);
    DegreeSet::new([
        q2 * q2,
        q2 * q2 + 1,
        (q2 - 1) * (q2 - r + 1),
        (q2 - 1) * (q2 + r + 1),
        (1u64 << m) * (q2 - 1),
    ])
}

/// Degree set of a direct product: every product `d1 * ... * dl` with one
/// degree taken from each factor.
pub fn cd_product(factors: &[DegreeSet]) -> Result<DegreeSet> {
    if factors.is_empty() {
        return Err(Error::Domain("a product needs at least one factor".into()));
    }
    let mut acc = BTreeSet::from([1u64]);
    for factor in factors {
        let mut next = BTreeSet::new();
        for &a in &acc {
            for b in factor.iter() {
                let p = a.checked_mul(b).ok_or_else(|| Error::Overflow(format!("{a} * {b}")))?;
                next.insert(p);
            }
        }
        acc = next;
    }
    Ok(DegreeSet(acc))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedGroup {
    pub name: String,
    pub order: Option<u64>,
    pub degrees: DegreeSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeTable {
    groups: BTreeMap<String, TabulatedGroup>,
}

impl DegreeTable {
    pub fn builtin() -> Self {
        parse_tabulated(DEFAULT_DATA).expect("bundled degree table parses")
    }

    pub fn get(&self, name: &str) -> Result<&TabulatedGroup> {
        self.groups.get(name).ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(String::as_str)
    }

    pub fn groups(&self) -> impl Iterator<Item = &TabulatedGroup> {
        self.groups.values()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '(' | ')'))
}

/// Reads a degree table. Records look like
///
/// ```text
/// group A7
/// order 2520
/// degrees 1 6 10 14 15 21 35
/// end
/// ```
///
/// `#` starts a comment; blank lines are ignored.
pub fn load_tabulated(source: impl BufRead) -> Result<DegreeTable> {
    let mut table = DegreeTable::default();
    let mut current: Option<(String, Option<u64>, Option<DegreeSet>, usize)> = None;
    for (idx, line) in source.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Syntax { line: lineno, msg: e.to_string() })?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line: lineno, msg };
        let mut words = text.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let args: Vec<&str> = words.collect();
        match (keyword, current.as_mut()) {
            ("group", None) => {
                let [name] = args[..] else {
                    return Err(syntax("`group` takes exactly one name".into()));
                };
                if !valid_name(name) {
                    return Err(syntax(format!("invalid group name `{name}`")));
                }
                if table.groups.contains_key(name) {
                    return Err(Error::DuplicateGroup(name.to_string()));
                }
                current = Some((name.to_string(), None, None, lineno));
            }
            ("group", Some(_)) => return Err(syntax("`group` before `end` of the previous record".into())),
            ("order", Some((_, order, _, _))) => {
                let [value] = args[..] else {
                    return Err(syntax("`order` takes exactly one integer".into()));
                };
                let n: u64 = value.parse().map_err(|_| syntax(format!("bad order `{value}`")))?;
                if n == 0 {
                    return Err(syntax("group order 0".into()));
                }
                *order = Some(n);
            }
            ("degrees", Some((_, _, degrees, _))) => {
                if args.is_empty() {
                    return Err(syntax("`degrees` needs at least one value".into()));
                }
                let mut ds = Vec::with_capacity(args.len());
                for a in args {
                    let d: u64 = a.parse().map_err(|_| syntax(format!("bad degree `{a}`")))?;
                    if d == 0 {
                        return Err(syntax("degree 0".into()));
                    }
                    ds.push(d);
                }
                *degrees = Some(DegreeSet::new(ds)?);
            }
            ("end", Some(_)) => {
                let (name, order, degrees, _) = current.take().expect("record open");
                let degrees = degrees.ok_or_else(|| syntax(format!("group `{name}` has no `degrees` line")))?;
                table.groups.insert(name.clone(), TabulatedGroup { name, order, degrees });
            }
            ("order" | "degrees" | "end", None) => {
                return Err(syntax(format!("`{keyword}` outside a group record")));
            }
            (other, _) => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }
    if let Some((name, _, _, line)) = current {
        return Err(Error::Syntax { line, msg: format!("group `{name}` is missing `end`") });
    }
    Ok(table)
}

pub fn parse_tabulated(text: &str) -> Result<DegreeTable> {
    load_tabulated(text.as_bytes())
}
