//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..order` with the identity fixed at index 0;
//! every layer above this one depends only on that encoding. Construction
//! validates the table (identity, inverses, associativity, generation) before
//! a `FiniteGroup` value can exist.

mod families;

pub use families::agl32_with_retraction;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// Hard ceiling on constructed group order (products, symmetric closures).
pub const MAX_GROUP_ORDER: usize = 10_000;

/// Orders up to this bound get the exhaustive associativity check; larger
/// tables are spot-checked on 10^6 deterministically sampled triples.
const EXHAUSTIVE_ASSOC_BOUND: usize = 256;

/// Cap for full normal-subgroup enumeration.
const NORMAL_SUBGROUP_ORDER_CAP: usize = 2000;
const NORMAL_SUBGROUP_COUNT_CAP: usize = 5000;

/// Mixed-radix coordinates for a group built as a direct product of cyclic
/// factors. Row-major: the first modulus owns the largest stride.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianBasis {
    moduli: Vec<usize>,
    strides: Vec<usize>,
}

impl AbelianBasis {
    fn new(moduli: Vec<usize>) -> Self {
        let mut strides = vec![1; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        AbelianBasis { moduli, strides }
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn coords(&self, idx: usize) -> Vec<usize> {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| idx / s % m)
            .collect()
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum()
    }

    /// Element index of the i-th standard basis element.
    pub fn basis_element(&self, i: usize) -> usize {
        self.strides[i]
    }
}

/// A finite group as a complete multiplication table over indexed elements.
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    generators: Vec<usize>,
    label: String,
    abelian_basis: Option<AbelianBasis>,
    abelian: OnceLock<bool>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates the raw table and wraps it. `construction_generators` must
    /// generate; they are then greedily minimized.
    pub(crate) fn from_table(
        label: String,
        order: usize,
        table: Vec<u16>,
        construction_generators: Vec<usize>,
        abelian_basis: Option<AbelianBasis>,
    ) -> Result<FiniteGroup> {
        validate_table(order, &table)?;
        let mut inverses = vec![u16::MAX; order];
        for x in 0..order {
            let mut found = false;
            for y in 0..order {
                if table[x * order + y] == 0 {
                    if table[y * order + x] != 0 {
                        return Err(Error::InvalidParameter(format!(
                            "element {x} has one-sided inverse {y}"
                        )));
                    }
                    inverses[x] = y as u16;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::InvalidParameter(format!(
                    "element {x} has no inverse"
                )));
            }
        }
        let mut g = FiniteGroup {
            order,
            table,
            inverses,
            generators: construction_generators,
            label,
            abelian_basis,
            abelian: OnceLock::new(),
        };
        let reached = g.closure(&g.generators);
        if reached.len() != order {
            return Err(Error::InvalidParameter(format!(
                "generators {:?} of {} reach only {} of {} elements",
                g.generators,
                g.label,
                reached.len(),
                order
            )));
        }
        g.generators = g.minimal_generators();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn abelian_basis(&self) -> Option<&AbelianBasis> {
        self.abelian_basis.as_ref()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut base = x;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Smallest k >= 1 with x^k = identity.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        *self.abelian.get_or_init(|| {
            for x in 0..self.order {
                for y in x + 1..self.order {
                    if self.mul(x, y) != self.mul(y, x) {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// The set {x : xa = ax}, ascending.
    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| self.mul(x, a) == self.mul(a, x))
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Subgroup generated by `gens`, as an ascending element list.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut v = self.closure(gens);
        v.sort_unstable();
        v
    }

    /// BFS closure of {identity} under right multiplication by `gens`,
    /// in discovery order.
    pub(crate) fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BitRow::new(self.order);
        seen.set(0);
        let mut out = vec![0usize];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen.get(y) {
                    seen.set(y);
                    out.push(y);
                }
            }
        }
        out
    }

    /// Conjugacy classes, each ascending, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..n {
                let c = self.mul(self.mul(self.inv(g), x), g);
                if !assigned[c] {
                    assigned[c] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Subgroup generated by all commutators x^-1 y^-1 x y.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order;
        let mut seen = BitRow::new(n);
        let mut comms = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let c = self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y));
                if !seen.get(c) {
                    seen.set(c);
                    comms.push(c);
                }
            }
        }
        self.subgroup(&comms)
    }

    /// All normal subgroups, as joins of normal closures of conjugacy
    /// classes, sorted by size then lexicographically.
    pub fn normal_subgroups(&self) -> Result<Vec<Vec<usize>>> {
        if self.order > NORMAL_SUBGROUP_ORDER_CAP {
            return Err(Error::size(
                "normal subgroup enumeration order",
                NORMAL_SUBGROUP_ORDER_CAP as u64,
                self.order as u64,
            ));
        }
        let mut found: Vec<Vec<usize>> = vec![vec![0]];
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for class in self.conjugacy_classes() {
            let sub = self.subgroup(&class);
            if !found.contains(&sub) && !queue.contains(&sub) {
                queue.push(sub);
            }
        }
        while let Some(sub) = queue.pop() {
            if found.contains(&sub) {
                continue;
            }
            for other in found.clone() {
                let mut gens = sub.clone();
                gens.extend_from_slice(&other);
                let join = self.subgroup(&gens);
                if !found.contains(&join) && !queue.contains(&join) && join != sub {
                    queue.push(join);
                }
            }
            found.push(sub);
            if found.len() > NORMAL_SUBGROUP_COUNT_CAP {
                return Err(Error::size(
                    "normal subgroup count",
                    NORMAL_SUBGROUP_COUNT_CAP as u64,
                    found.len() as u64,
                ));
            }
        }
        found.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(found)
    }

    /// True iff the group has exactly two normal subgroups. Computed from
    /// normal closures of single classes, so it works above the full
    /// enumeration cap.
    pub fn is_simple(&self) -> bool {
        if self.order == 1 {
            return false;
        }
        self.conjugacy_classes()
            .into_iter()
            .filter(|c| c != &[0])
            .all(|c| self.subgroup(&c).len() == self.order)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().len() == self.order
    }

    /// One-call structural summary. `normal_subgroups` is `None` when the
    /// order exceeds the enumeration cap; everything else is still computed.
    pub fn structural_predicates(&self) -> StructuralReport {
        StructuralReport {
            is_abelian: self.is_abelian(),
            is_simple: self.is_simple(),
            is_perfect: self.is_perfect(),
            center: self.center(),
            derived_subgroup: self.derived_subgroup(),
            normal_subgroups: self.normal_subgroups().ok(),
        }
    }

    /// Re-runs every construction invariant: identity, inverses,
    /// associativity (exhaustive up to order 256, sampled above), and
    /// generator closure.
    pub fn verify_integrity(&self) -> Result<()> {
        validate_table(self.order, &self.table)?;
        for x in 0..self.order {
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "inverse table wrong at element {x}"
                )));
            }
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidParameter("empty generating set".into()));
        }
        if self.closure(&self.generators).len() != self.order {
            return Err(Error::InvalidParameter(
                "generators do not generate the group".into(),
            ));
        }
        Ok(())
    }

    fn minimal_generators(&self) -> Vec<usize> {
        let n = self.order;
        if n == 1 {
            return vec![0];
        }
        // any single element of full order wins
        let mut best_single = None;
        for x in 1..n {
            let o = self.element_order(x);
            if o == n {
                return vec![x];
            }
            if best_single.is_none_or(|(bo, _)| o > bo) {
                best_single = Some((o, x));
            }
        }
        let mut gens = vec![best_single.expect("nontrivial group").1];
        loop {
            let mut best: Option<(usize, usize)> = None; // (closure size, candidate)
            let current = self.closure(&gens);
            let mut in_current = BitRow::new(n);
            for &x in &current {
                in_current.set(x);
            }
            for y in 1..n {
                if in_current.get(y) {
                    continue;
                }
                gens.push(y);
                let size = self.closure(&gens).len();
                gens.pop();
                if size == n {
                    gens.push(y);
                    return gens;
                }
                if best.is_none_or(|(bs, _)| size > bs) {
                    best = Some((size, y));
                }
            }
            match best {
                Some((_, y)) => gens.push(y),
                None => return gens, // closure already full
            }
        }
    }
}

/// Structural summary returned by [`FiniteGroup::structural_predicates`].
#[derive(Debug)]
pub struct StructuralReport {
    pub is_abelian: bool,
    pub is_simple: bool,
    pub is_perfect: bool,
    pub center: Vec<usize>,
    pub derived_subgroup: Vec<usize>,
    pub normal_subgroups: Option<Vec<Vec<usize>>>,
}

/// Checks shape, closure, the identity row/column at index 0, and
/// associativity of a raw multiplication table. Exhaustive for orders up to
/// 256; above that, 10^6 deterministically sampled triples.
pub fn validate_table(order: usize, table: &[u16]) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidParameter("empty group".into()));
    }
    if table.len() != order * order {
        return Err(Error::InvalidParameter(format!(
            "table has {} entries, expected {}",
            table.len(),
            order * order
        )));
    }
    if let Some(bad) = table.iter().position(|&e| e as usize >= order) {
        return Err(Error::InvalidParameter(format!(
            "table entry out of range at ({}, {})",
            bad / order,
            bad % order
        )));
    }
    for x in 0..order {
        if table[x] as usize != x || table[x * order] as usize != x {
            return Err(Error::InvalidParameter(format!(
                "element 0 is not an identity at element {x}"
            )));
        }
    }
    let mul = |x: usize, y: usize| table[x * order + y] as usize;
    let check = |x: usize, y: usize, z: usize| -> Result<()> {
        if mul(mul(x, y), z) != mul(x, mul(y, z)) {
            return Err(Error::InvalidParameter(format!(
                "associativity fails at triple ({x}, {y}, {z})"
            )));
        }
        Ok(())
    };
    if order <= EXHAUSTIVE_ASSOC_BOUND {
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    check(x, y, z)?;
                }
            }
        }
    } else {
        let mut state = 0x9e3779b97f4a7c15u64 ^ (order as u64);
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..1_000_000 {
            let x = (next() % order as u64) as usize;
            let y = (next() % order as u64) as usize;
            let z = (next() % order as u64) as usize;
            check(x, y, z)?;
        }
    }
    Ok(())
}

/// Componentwise product of two groups; element (x, y) has index
/// x * |H| + y. Generators are G's paired with the identity of H plus the
/// identity of G paired with H's.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let order = g.order() * h.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::size(
            "direct product order",
            MAX_GROUP_ORDER as u64,
            order as u64,
        ));
    }
    let (gn, hn) = (g.order(), h.order());
    let mut table = vec![0u16; order * order];
    for x1 in 0..gn {
        for y1 in 0..hn {
            let a = x1 * hn + y1;
            for x2 in 0..gn {
                let gx = g.mul(x1, x2) * hn;
                for y2 in 0..hn {
                    table[a * order + (x2 * hn + y2)] = (gx + h.mul(y1, y2)) as u16;
                }
            }
        }
    }
    let mut generators: Vec<usize> = g.generators().iter().map(|&x| x * hn).collect();
    generators.extend(h.generators().iter().copied());
    generators.dedup();
    let basis = match (g.abelian_basis(), h.abelian_basis()) {
        (Some(a), Some(b)) => {
            let mut moduli = a.moduli().to_vec();
            moduli.extend_from_slice(b.moduli());
            Some(AbelianBasis::new(moduli))
        }
        _ => None,
    };
    let label = format!("({})x({})", g.label(), h.label());
    let mut built = FiniteGroup::from_table(label, order, table, generators, basis)?;
    // keep the componentwise generating set: it is part of this operation's
    // contract, and callers that want a minimal one rebuild via a spec
    built.generators = g
        .generators()
        .iter()
        .map(|&x| x * hn)
        .chain(h.generators().iter().copied())
        .filter(|&x| x != 0)
        .collect();
    if built.generators.is_empty() {
        built.generators = vec![0];
    }
    Ok(built)
}

/// Family constructors for every group the library knows how to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Metacyclic { q: usize, m: usize },
    Heisenberg(usize),
    ModularP3(usize),
    Sl25,
    Agl32,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::Quaternion => write!(f, "quaternion"),
            GroupSpec::Metacyclic { q, m } => write!(f, "metacyclic:{q},{m}"),
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            GroupSpec::ModularP3(p) => write!(f, "modular_p3:{p}"),
            GroupSpec::Sl25 => write!(f, "sl25"),
            GroupSpec::Agl32 => write!(f, "agl32"),
            GroupSpec::Product(a, b) => write!(f, "product:({a})x({b})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let bad = |msg: &str| Error::ParseSpec(s.to_string(), msg.to_string());
        match s {
            "quaternion" => return Ok(GroupSpec::Quaternion),
            "sl25" => return Ok(GroupSpec::Sl25),
            "agl32" => return Ok(GroupSpec::Agl32),
            _ => {}
        }
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `family:params`"))?;
        let parse_num = |t: &str| -> Result<usize> {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad(&format!("bad number `{t}`")))
        };
        match head {
            "cyclic" => Ok(GroupSpec::Cyclic(parse_num(rest)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(parse_num(rest)?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(parse_num(rest)?)),
            "symmetric" => Ok(GroupSpec::Symmetric(parse_num(rest)?)),
            "alternating" => Ok(GroupSpec::Alternating(parse_num(rest)?)),
            "heisenberg" => Ok(GroupSpec::Heisenberg(parse_num(rest)?)),
            "modular_p3" => Ok(GroupSpec::ModularP3(parse_num(rest)?)),
            "abelian" => {
                let moduli: Result<Vec<usize>> = rest.split(',').map(parse_num).collect();
                Ok(GroupSpec::Abelian(moduli?))
            }
            "metacyclic" => {
                let (q, m) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("metacyclic needs `q,m`"))?;
                Ok(GroupSpec::Metacyclic {
                    q: parse_num(q)?,
                    m: parse_num(m)?,
                })
            }
            "product" => {
                let rest = rest.trim();
                if !rest.starts_with('(') {
                    return Err(bad("product needs `(A)x(B)`"));
                }
                let close = matching_paren(rest, 0).ok_or_else(|| bad("unbalanced parens"))?;
                let left: GroupSpec = rest[1..close].parse()?;
                let tail = &rest[close + 1..];
                let tail = tail
                    .strip_prefix('x')
                    .ok_or_else(|| bad("product needs `x` between factors"))?;
                let tail = tail.trim();
                if !tail.starts_with('(') || !tail.ends_with(')') {
                    return Err(bad("product needs `(A)x(B)`"));
                }
                let close2 = matching_paren(tail, 0).ok_or_else(|| bad("unbalanced parens"))?;
                if close2 != tail.len() - 1 {
                    return Err(bad("trailing junk after product"));
                }
                let right: GroupSpec = tail[1..close2].parse()?;
                Ok(GroupSpec::Product(Box::new(left), Box::new(right)))
            }
            other => Err(bad(&format!("unknown family `{other}`"))),
        }
    }
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0;
    for (i, &b) in bytes.iter().enumerate().skip(open) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Build the group a spec describes.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    families::build(spec)
}
