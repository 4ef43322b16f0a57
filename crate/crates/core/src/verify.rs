//! Deterministic verification suites over a group family. Every suite
//! returns a report whose serialization depends only on the family, caps
//! and seed.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bisets::{compose, cross as biset_cross, identity as biset_identity, mackey_compose, BisetElement};
use crate::burnside::{idempotents, marks, table_of_marks, BurnsideElement};
use crate::center::{
    center_product, commutes, identity_candidate, iota, is_center_element, pi, square_sides, square_targets,
    GroupFamily,
};
use crate::decomp::{apply_block, block_green_functor, decompose, shifted_burnside_block_basis, IdempotentFamily};
use crate::error::{Error, Result};
use crate::green::{
    adj_tilde, lambda, pa_compose, pa_identity, psi, rho, theta, Burnside, DynGreen, GreenFunctor, Module, PAMorphism,
    Shifted,
};
use crate::groups::{factor_map, quotient, subgroup_lattice, Caps, FiniteGroup, GroupMap};
use crate::linalg::same_span;
use crate::rational::{frac, Q};

pub const SUITES: &[&str] = &[
    "idempotents",
    "engines",
    "axioms",
    "pa",
    "shifts",
    "commute",
    "center",
    "decomp",
];

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub family: GroupFamily,
    pub seed: u64,
    /// Number of random elements in sampled checks.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn caps(&self) -> &Caps {
        &self.family.caps
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    /// Cases not run because an ambient exceeded the caps.
    pub skipped: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub family: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub verdict: bool,
}

struct Tally {
    name: String,
    cases: usize,
    skipped: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            skipped: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(context());
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            skipped: self.skipped,
            ok: self.first_failure.is_none(),
            first_failure: self.first_failure,
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let checks = match name {
        "idempotents" => idempotent_checks(cfg)?,
        "engines" => engine_checks(cfg)?,
        "axioms" => axiom_checks(cfg)?,
        "pa" => pa_checks(cfg)?,
        "shifts" => shift_checks(cfg)?,
        "commute" => commute_checks(cfg)?,
        "center" => center_checks(cfg)?,
        "decomp" => decomp_checks(cfg)?,
        _ => return Err(Error::Invalid(format!("unknown suite `{name}`; known: all, {}", SUITES.join(", ")))),
    };
    let verdict = checks.iter().all(|c| c.ok);
    Ok(SuiteReport {
        suite: name.into(),
        seed: cfg.seed,
        family: cfg.family.names(),
        checks,
        verdict,
    })
}

/// `all` expands to every suite in order.
pub fn run(name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, cfg)).collect()
    } else {
        Ok(vec![run_suite(name, cfg)?])
    }
}

fn burnside(cfg: &VerifyConfig) -> DynGreen {
    Arc::new(Burnside::new(*cfg.caps()))
}

fn nontrivial(cfg: &VerifyConfig) -> Vec<FiniteGroup> {
    cfg.family.groups().iter().filter(|g| !g.is_trivial()).cloned().collect()
}

fn idempotent_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let caps = cfg.caps();
    let mut ortho = Tally::new("orthogonal idempotents");
    let mut sum = Tally::new("idempotents sum to [G/G]");
    let mut marks_delta = Tally::new("marks of e_K are the indicator of K");
    for g in cfg.family.groups() {
        let family = idempotents(g, caps)?;
        let mut total = BurnsideElement::zero(g);
        for (i, (_, e)) in family.iter().enumerate() {
            total = total.add(e)?;
            for (j, (_, f)) in family.iter().enumerate() {
                let p = crate::burnside::mult(e, f, caps)?;
                let expected = if i == j { e.clone() } else { BurnsideElement::zero(g) };
                ortho.check(p == expected, || format!("{g}: e_{i} e_{j}"));
            }
            let m = marks(e, caps)?;
            let indicator: Vec<Q> = (0..family.len()).map(|j| Q::from_integer(((i == j) as i64).into())).collect();
            marks_delta.check(m.values == indicator, || format!("{g}: marks of e_{i}"));
        }
        sum.check(total == BurnsideElement::unit(g), || format!("{g}: sum"));
        let table = table_of_marks(g, caps)?;
        marks_delta.check(table.len() == family.len(), || format!("{g}: table size"));
    }
    Ok(vec![ortho.finish(), sum.finish(), marks_delta.finish()])
}

fn transitive_basis(h: &FiniteGroup, g: &FiniteGroup, caps: &Caps) -> Result<Vec<BisetElement>> {
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    crate::burnside::burnside_basis(&hg, caps)?
        .into_iter()
        .map(|b| BisetElement::from_burnside(h, g, b))
        .collect()
}

fn random_element(rng: &mut ChaCha8Rng, h: &FiniteGroup, g: &FiniteGroup, caps: &Caps) -> Result<BisetElement> {
    let basis = transitive_basis(h, g, caps)?;
    let mut out = BisetElement::zero(h, g);
    for _ in 0..rng.gen_range(1..=3) {
        let b = &basis[rng.gen_range(0..basis.len())];
        let c = frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        out = out.add(&b.scale(&c))?;
    }
    Ok(out)
}

fn engine_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let caps = cfg.caps();
    let groups = cfg.family.groups();
    let mut exhaustive = Tally::new("set-level and Mackey composition agree on transitive pairs");
    for h in groups {
        for g in groups {
            for k in groups {
                let betas = transitive_basis(h, g, caps)?;
                let alphas = transitive_basis(g, k, caps)?;
                for (i, b) in betas.iter().enumerate() {
                    for (j, a) in alphas.iter().enumerate() {
                        exhaustive.check(compose(b, a, caps)? == mackey_compose(b, a, caps)?, || {
                            format!("{h} <- {g} <- {k}: basis {i} o basis {j}")
                        });
                    }
                }
            }
        }
    }
    let mut sampled = Tally::new("set-level and Mackey composition agree on random elements");
    let mut assoc = Tally::new("composition is associative on random elements");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 0..cfg.samples {
        let pick = |rng: &mut ChaCha8Rng| groups[rng.gen_range(0..groups.len())].clone();
        let (h, g, k, l) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let b = random_element(&mut rng, &h, &g, caps)?;
        let a = random_element(&mut rng, &g, &k, caps)?;
        let ba = compose(&b, &a, caps)?;
        sampled.check(ba == mackey_compose(&b, &a, caps)?, || format!("sample {n}: {h} <- {g} <- {k}"));
        if n % 4 == 0 {
            let c = random_element(&mut rng, &k, &l, caps)?;
            let left = compose(&ba, &c, caps)?;
            let right = compose(&b, &compose(&a, &c, caps)?, caps)?;
            assoc.check(left == right, || format!("sample {n}: {h} <- {g} <- {k} <- {l}"));
        }
    }
    Ok(vec![exhaustive.finish(), sampled.finish(), assoc.finish()])
}

/// The functors exercised by the axiom suite: the Burnside functor, its
/// shifts by the nontrivial family groups of order at most 3, and the
/// Burnside-idempotent blocks of each.
pub fn axiom_instances(cfg: &VerifyConfig) -> Result<Vec<DynGreen>> {
    let base = burnside(cfg);
    let mut out = vec![base.clone()];
    for l in nontrivial(cfg).into_iter().filter(|l| l.order() <= 3) {
        let shifted: DynGreen = Arc::new(Shifted::new(base.clone(), l.clone()));
        out.push(shifted.clone());
        let fam = IdempotentFamily::burnside(shifted, &l, cfg.caps())?;
        for i in 0..fam.elements.len() {
            out.push(Arc::new(block_green_functor(&fam, i)?));
        }
    }
    Ok(out)
}

/// Maps along which `A` must pull back by ring homomorphisms: subgroup
/// inclusions into `G` and projections from `G` onto its quotients.
fn structure_maps(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupMap>> {
    let lat = subgroup_lattice(g, caps)?;
    let mut out = Vec::new();
    for s in lat.subgroups() {
        out.push(s.as_group().1);
        if s.is_normal() && !s.is_trivial() {
            let (_, proj) = quotient(g, s)?;
            out.push(proj);
        }
    }
    Ok(out)
}

/// The Green axioms in both presentations for one functor over the family.
pub fn green_axioms(a: &dyn GreenFunctor, groups: &[FiniteGroup]) -> Result<Vec<CheckResult>> {
    let caps = a.caps();
    let name = a.name();
    let one = FiniteGroup::trivial();
    let eps = a.unit();
    let mut assoc = Tally::new(&format!("{name}: cross product is associative"));
    let mut unit = Tally::new(&format!("{name}: unit is neutral for the cross product"));
    let mut closed = Tally::new(&format!("{name}: cross products stay in A"));
    let mut natural = Tally::new(&format!("{name}: cross product is natural in both variables"));
    let mut ring = Tally::new(&format!("{name}: A(G) is a unital associative ring"));
    let mut defeq = Tally::new(&format!("{name}: cross product from the ring structure"));
    let mut homs = Tally::new(&format!("{name}: restrictions and inflations are ring maps"));
    let mut frobenius = Tally::new(&format!("{name}: Frobenius reciprocity for induction"));
    let bases: Vec<Vec<BurnsideElement>> = groups.iter().map(|g| a.basis(g)).collect::<Result<_>>()?;

    for (gi, g) in groups.iter().enumerate() {
        for x in &bases[gi] {
            unit.check(a.cross(&one, &eps, g, x)? == *x && a.cross(g, x, &one, &eps)? == *x, || {
                format!("{g}: {x}")
            });
        }
        let unit_g = a.unit_of(g)?;
        for x in &bases[gi] {
            ring.check(a.dot(g, &unit_g, x)? == *x && a.dot(g, x, &unit_g)? == *x, || format!("{g}: unit on {x}"));
            for y in &bases[gi] {
                let xy = a.dot(g, x, y)?;
                for z in &bases[gi] {
                    ring.check(a.dot(g, &xy, z)? == a.dot(g, x, &a.dot(g, y, z)?)?, || {
                        format!("{g}: ({x})({y})({z})")
                    });
                }
            }
        }
        for f in structure_maps(g, caps)? {
            let (s, t) = (f.source().clone(), f.target().clone());
            let target_basis = a.basis(&t)?;
            homs.check(a.pull(&f, &a.unit_of(&t)?)? == a.unit_of(&s)?, || format!("unit under pull {s} -> {t}"));
            for x in &target_basis {
                let fx = a.pull(&f, x)?;
                for y in &target_basis {
                    homs.check(a.pull(&f, &a.dot(&t, x, y)?)? == a.dot(&s, &fx, &a.pull(&f, y)?)?, || {
                        format!("product under pull {s} -> {t}")
                    });
                }
            }
            if f.is_injective() {
                for u in a.basis(&s)? {
                    for x in &target_basis {
                        let lhs = a.push(&f, &a.dot(&s, &u, &a.pull(&f, x)?)?)?;
                        let rhs = a.dot(&t, &a.push(&f, &u)?, x)?;
                        frobenius.check(lhs == rhs, || format!("{t} over {s}: {u} and {x}"));
                    }
                }
            }
        }
        for (hi, h) in groups.iter().enumerate() {
            let gh = FiniteGroup::product_of(&[g.clone(), h.clone()]);
            let p1 = factor_map(&[g.clone(), h.clone()], &[0]);
            let p2 = factor_map(&[g.clone(), h.clone()], &[1]);
            for x in &bases[gi] {
                for y in &bases[hi] {
                    let xy = a.cross(g, x, h, y)?;
                    closed.check(a.contains(&gh, &xy)?, || format!("{x} x {y}"));
                    let via_ring = a.dot(&gh, &a.pull(&p1, x)?, &a.pull(&p2, y)?)?;
                    defeq.check(xy == via_ring, || format!("{g}, {h}: {x} x {y}"));
                    for (ki, k) in groups.iter().enumerate() {
                        let hk = FiniteGroup::product_of(&[h.clone(), k.clone()]);
                        for z in &bases[ki] {
                            let left = a.cross(&gh, &xy, k, z)?;
                            let right = a.cross(g, x, &hk, &a.cross(h, y, k, z)?)?;
                            assoc.check(left == right, || format!("({x} x {y}) x {z}"));
                        }
                    }
                }
            }
            // naturality of the cross product against transitive bisets in
            // each variable separately
            for (ki, k) in groups.iter().enumerate() {
                if ki > gi {
                    continue;
                }
                for beta in transitive_basis(k, g, caps)? {
                    let left_op = biset_cross(&beta, &biset_identity(h), caps)?;
                    let right_op = biset_cross(&biset_identity(h), &beta, caps)?;
                    for x in &bases[gi] {
                        let bx = a.act_element(&beta, x)?;
                        for y in &bases[hi] {
                            let lhs = a.act_element(&left_op, &a.cross(g, x, h, y)?)?;
                            natural.check(lhs == a.cross(k, &bx, h, y)?, || format!("left: {x} x {y}"));
                            let lhs = a.act_element(&right_op, &a.cross(h, y, g, x)?)?;
                            natural.check(lhs == a.cross(h, y, k, &bx)?, || format!("right: {y} x {x}"));
                        }
                    }
                }
            }
        }
    }
    Ok(vec![
        assoc.finish(),
        unit.finish(),
        closed.finish(),
        natural.finish(),
        ring.finish(),
        defeq.finish(),
        homs.finish(),
        frobenius.finish(),
    ])
}

fn axiom_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for a in axiom_instances(cfg)? {
        out.extend(green_axioms(&*a, cfg.family.groups())?);
    }
    Ok(out)
}

fn pa_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let a = burnside(cfg);
    let caps = cfg.caps();
    let groups = cfg.family.groups();
    let mut assoc = Tally::new("composition of A-morphisms is associative");
    let mut units = Tally::new("identities are neutral");
    let mut agree = Tally::new("composition of A-morphisms equals biset composition");
    for h in groups {
        let id_h = pa_identity(&*a, h)?;
        for g in groups {
            let id_g = pa_identity(&*a, g)?;
            for beta in PAMorphism::basis(&*a, g, h)? {
                units.check(pa_compose(&*a, &id_h, &beta)? == beta && pa_compose(&*a, &beta, &id_g)? == beta, || {
                    format!("{g} -> {h}: {}", beta.value)
                });
                let b = BisetElement::from_burnside(h, g, beta.value.clone())?;
                for k in groups {
                    for alpha in PAMorphism::basis(&*a, k, g)? {
                        let ba = pa_compose(&*a, &beta, &alpha)?;
                        let al = BisetElement::from_burnside(g, k, alpha.value.clone())?;
                        agree.check(ba.value == *compose(&b, &al, caps)?.as_burnside(), || {
                            format!("{h} <- {g} <- {k}")
                        });
                        for l in groups {
                            for gamma in PAMorphism::basis(&*a, l, k)? {
                                let left = pa_compose(&*a, &ba, &gamma)?;
                                let right = pa_compose(&*a, &beta, &pa_compose(&*a, &alpha, &gamma)?)?;
                                assoc.check(left == right, || format!("{h} <- {g} <- {k} <- {l}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(vec![assoc.finish(), units.finish(), agree.finish()])
}

fn shift_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let a = burnside(cfg);
    let groups: Vec<FiniteGroup> = cfg.family.groups().iter().filter(|g| g.order() <= 2).cloned().collect();
    let mut rho_theta_psi = Tally::new("rho_L = theta_L o psi_L");
    let mut functorial = Tally::new("psi, theta, rho and lambda are functors");
    let mut naturality = Tally::new("the adjunction bijection is natural in both variables");
    for l in nontrivial(cfg).into_iter().filter(|l| l.order() <= 3) {
        let al: DynGreen = Arc::new(Shifted::new(a.clone(), l.clone()));
        for g in &groups {
            let id = pa_identity(&*a, g)?;
            let gl = FiniteGroup::product_of(&[g.clone(), l.clone()]);
            let lg = FiniteGroup::product_of(&[l.clone(), g.clone()]);
            functorial.check(
                psi(&*a, &l, &id)? == pa_identity(&*al, g)?
                    && theta(&*a, &l, &pa_identity(&*al, g)?)? == pa_identity(&*a, &gl)?
                    && rho(&*a, &l, &id)? == pa_identity(&*a, &gl)?
                    && lambda(&*a, &l, &id)? == pa_identity(&*a, &lg)?,
                || format!("identity of {g}, L = {l}"),
            );
            for h in &groups {
                for alpha in PAMorphism::basis(&*a, g, h)? {
                    rho_theta_psi.check(rho(&*a, &l, &alpha)? == theta(&*a, &l, &psi(&*a, &l, &alpha)?)?, || {
                        format!("L = {l}, {g} -> {h}: {}", alpha.value)
                    });
                }
                for k in &groups {
                    for beta in PAMorphism::basis(&*a, g, h)? {
                        for alpha in PAMorphism::basis(&*a, k, g)? {
                            let ba = pa_compose(&*a, &beta, &alpha)?;
                            let ctx = || format!("L = {l}, {k} -> {g} -> {h}");
                            functorial.check(
                                psi(&*a, &l, &ba)?
                                    == pa_compose(&*al, &psi(&*a, &l, &beta)?, &psi(&*a, &l, &alpha)?)?,
                                ctx,
                            );
                            functorial.check(
                                rho(&*a, &l, &ba)? == pa_compose(&*a, &rho(&*a, &l, &beta)?, &rho(&*a, &l, &alpha)?)?,
                                ctx,
                            );
                            functorial.check(
                                lambda(&*a, &l, &ba)?
                                    == pa_compose(&*a, &lambda(&*a, &l, &beta)?, &lambda(&*a, &l, &alpha)?)?,
                                ctx,
                            );
                        }
                    }
                    for beta in PAMorphism::basis(&*al, g, h)? {
                        for alpha in PAMorphism::basis(&*al, k, g)? {
                            let ba = pa_compose(&*al, &beta, &alpha)?;
                            functorial.check(
                                theta(&*a, &l, &ba)?
                                    == pa_compose(&*a, &theta(&*a, &l, &beta)?, &theta(&*a, &l, &alpha)?)?,
                                || format!("theta, L = {l}, {k} -> {g} -> {h}"),
                            );
                            // precomposition in A_L against theta on the A side
                            let lhs = adj_tilde(&l, &ba);
                            let rhs = pa_compose(&*a, &adj_tilde(&l, &beta), &theta(&*a, &l, &alpha)?)?;
                            naturality.check(lhs == rhs, || format!("source side, L = {l}, {k} -> {g} -> {h}"));
                        }
                        // postcomposition with psi against the A side
                        for v in PAMorphism::basis(&*a, h, k)? {
                            let lhs = adj_tilde(&l, &pa_compose(&*al, &psi(&*a, &l, &v)?, &beta)?);
                            let rhs = pa_compose(&*a, &v, &adj_tilde(&l, &beta))?;
                            naturality.check(lhs == rhs, || format!("target side, L = {l}, {g} -> {h} -> {k}"));
                        }
                    }
                }
            }
        }
    }
    Ok(vec![rho_theta_psi.finish(), functorial.finish(), naturality.finish()])
}

/// The square identities and `square_commutes <=> commutes` over the family.
pub fn commute_checks_over(a: &dyn GreenFunctor, groups: &[FiniteGroup]) -> Result<Vec<CheckResult>> {
    let mut first = Tally::new("(alpha x L) o (G x beta) = Iso(alpha x beta)");
    let mut second = Tally::new("(H x beta) o (alpha x K) = Iso(beta x alpha)");
    let mut iff = Tally::new("square commutes exactly when alpha and beta commute");
    let mut morphisms = Vec::new();
    for g in groups {
        for h in groups {
            morphisms.extend(PAMorphism::basis(a, g, h)?);
        }
    }
    for alpha in &morphisms {
        for beta in &morphisms {
            let sides = match square_sides(a, alpha, beta) {
                Err(e) if e.is_cap() => {
                    for t in [&mut first, &mut second, &mut iff] {
                        t.skip();
                    }
                    continue;
                }
                r => r?,
            };
            let (lhs, rhs) = sides;
            let (p, q) = square_targets(a, alpha, beta)?;
            let ctx = || {
                format!(
                    "alpha: {} -> {}, beta: {} -> {}",
                    alpha.source, alpha.target, beta.source, beta.target
                )
            };
            first.check(lhs.value == p, ctx);
            second.check(rhs.value == q, ctx);
            let hg = FiniteGroup::product_of(&[alpha.target.clone(), alpha.source.clone()]);
            let lk = FiniteGroup::product_of(&[beta.target.clone(), beta.source.clone()]);
            let c = commutes(a, &hg, &alpha.value, &lk, &beta.value)?;
            iff.check((lhs.value == rhs.value) == c, ctx);
        }
    }
    Ok(vec![first.finish(), second.finish(), iff.finish()])
}

fn commute_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    commute_checks_over(&*burnside(cfg), cfg.family.groups())
}

fn center_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let a = burnside(cfg);
    let fam = &cfg.family;
    let mut natural = Tally::new("iota of commutant elements is natural");
    let mut retract = Tally::new("pi o iota is the identity");
    let mut neutral = Tally::new("the identity candidate is neutral for the center product");
    let mut at_one = Tally::new("center product at 1 is the cross product of the components");
    let id = identity_candidate(&*a, fam)?;
    natural.check(is_center_element(&*a, &id, fam)?.verdict, || "identity candidate".into());
    let mut candidates = Vec::new();
    for k in fam.groups().iter().filter(|k| k.order() <= 2) {
        for x in a.basis(k)? {
            let t = iota(&*a, k, &x, fam)?;
            natural.check(is_center_element(&*a, &t, fam)?.verdict, || format!("iota({x})"));
            retract.check(pi(&t)? == x, || format!("pi(iota({x}))"));
            neutral.check(
                center_product(&*a, &t, &id, fam)? == t && center_product(&*a, &id, &t, fam)? == t,
                || format!("iota({x})"),
            );
            candidates.push((k.clone(), t));
        }
    }
    for (k, t) in &candidates {
        for (l, s) in &candidates {
            let ts = center_product(&*a, t, s, fam)?;
            at_one.check(pi(&ts)? == a.cross(k, &pi(t)?, l, &pi(s)?)?, || format!("shifts {k}, {l}"));
        }
    }
    Ok(vec![natural.finish(), retract.finish(), neutral.finish(), at_one.finish()])
}

fn decomp_checks(cfg: &VerifyConfig) -> Result<Vec<CheckResult>> {
    let caps = cfg.caps();
    let base = burnside(cfg);
    let groups = cfg.family.groups();
    let mut direct = Tally::new("M(G) is the direct sum of its blocks");
    let mut predicted = Tally::new("blocks of the shifted Burnside functor match the projection census");
    let mut idempotent = Tally::new("block projections are idempotent");
    for h in groups {
        let a: DynGreen = Arc::new(Shifted::new(base.clone(), h.clone()));
        let fam = IdempotentFamily::burnside(a.clone(), h, caps)?;
        let m = Module::regular(&*a);
        let report = decompose(&m, &fam, groups)?;
        direct.check(report.verdict, || format!("shift by {h}"));
        for (k, e) in idempotents(h, caps)? {
            for g in groups {
                let computed: Vec<_> = apply_block(&e, &m, g)?;
                let again: Vec<_> = computed
                    .iter()
                    .map(|v| a.unit_action(g, &e, v))
                    .collect::<Result<_>>()?;
                idempotent.check(again == computed, || format!("{h}, {g}"));
                let pred = shifted_burnside_block_basis(h, &k, g, caps)?;
                let cv: Vec<_> = computed.iter().map(|b| b.vector().clone()).collect();
                let pv: Vec<_> = pred.iter().map(|b| b.vector().clone()).collect();
                predicted.check(same_span(&cv, &pv), || format!("H = {h}, K = {:?}, G = {g}", k.members()));
            }
        }
    }
    Ok(vec![direct.finish(), predicted.finish(), idempotent.finish()])
}
