//! Catalog of polynomial identities and the checker that produces [`IdentityReport`]s.
//!
//! Each identity is a list of components; a component is a residual (left minus right)
//! with an optional degree vector. Homogeneous components can be verified exhaustively
//! through their full linearization on basis tuples; the rest are checked on seeded
//! random exact tuples.

use std::cell::RefCell;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{vadd, vis_zero, vscale, vsub, vzero, StructureAlgebra, Vector};
use crate::scalar::{fmt_rational, l1_norm, q, qi, random_vector, Rational};

pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_SEED: u64 = 1;
/// Maximum number of evaluations spent on one exhaustive component.
pub const EXHAUSTIVE_BUDGET: u64 = 20_000;
pub const DEFAULT_POWER_DEGREE: usize = 6;

const K3_NOTE: &str = "K3 has no closed form in associators; only the K2 term (gamma1 = gamma3 = 0) is checked";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    Unknown(String),
    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
}

/// Evaluation context: the algebra, the quasi-multiplication parameters and a linear form.
pub struct Ctx<'a> {
    pub alg: &'a StructureAlgebra,
    pub lambda: Rational,
    pub mu: Rational,
    functional: Option<Vector>,
    powers: RefCell<Option<(Vector, Vec<Vector>)>>,
}

impl<'a> Ctx<'a> {
    /// `lambda = mu = 1/2`; the linear form is `f(x) = <u, x> / <u, u>` for the unit `u`.
    pub fn new(alg: &'a StructureAlgebra) -> Self {
        let functional = alg.unit().map(|u| {
            let n = u.iter().fold(Rational::zero(), |acc, c| acc + c * c);
            vscale(&n.recip(), u)
        });
        Ctx { alg, lambda: q(1, 2), mu: q(1, 2), functional, powers: RefCell::new(None) }
    }

    pub fn with_quasi(mut self, lambda: Rational, mu: Rational) -> Self {
        self.lambda = lambda;
        self.mu = mu;
        self
    }

    pub fn with_functional(mut self, f: Vector) -> Self {
        self.functional = Some(f);
        self
    }

    pub fn functional(&self) -> Option<&Vector> {
        self.functional.as_ref()
    }

    fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn m(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.alg.mul_vec(x, y)
    }

    fn a(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.alg.assoc_vec(x, y, z)
    }

    fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.alg.comm_vec(x, y)
    }

    fn sq(&self, x: &[Rational]) -> Vector {
        self.pw(x, 2)
    }

    /// Left-normed power, `n >= 1`; powers of the most recent base are cached.
    fn pw(&self, x: &[Rational], n: usize) -> Vector {
        let mut cache = self.powers.borrow_mut();
        if cache.as_ref().is_none_or(|(b, _)| b.as_slice() != x) {
            *cache = Some((x.to_vec(), vec![x.to_vec()]));
        }
        let (_, pows) = cache.as_mut().expect("just set");
        while pows.len() < n {
            let next = self.m(pows.last().expect("nonempty"), x);
            pows.push(next);
        }
        pows[n - 1].clone()
    }

    fn qm(&self, x: &[Rational], y: &[Rational]) -> Vector {
        vadd(&vscale(&self.lambda, &self.m(x, y)), &vscale(&self.mu, &self.m(y, x)))
    }

    fn qa(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        vsub(&self.qm(&self.qm(x, y), z), &self.qm(x, &self.qm(y, z)))
    }

    fn star(&self, x: &[Rational]) -> Vector {
        self.alg.involution().expect("involution checked by caller").mul_vec(x)
    }

    fn lam(&self, x: &[Rational]) -> Rational {
        let f = self.functional.as_ref().expect("functional checked by caller");
        f.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

fn lc(terms: &[(i64, &Vector)]) -> Vector {
    let mut out = vzero(terms[0].1.len());
    for (c, v) in terms {
        if *c == 0 {
            continue;
        }
        let c = qi(*c);
        for (o, x) in out.iter_mut().zip(v.iter()) {
            if !x.is_zero() {
                *o += &c * x;
            }
        }
    }
    out
}

type Eval = Arc<dyn Fn(&Ctx, &[Vector]) -> Vector + Send + Sync>;

#[derive(Clone)]
pub struct Component {
    pub label: String,
    /// Degree in each variable, or `None` when the residual is not homogeneous.
    pub degrees: Option<Vec<u32>>,
    eval: Eval,
}

impl Component {
    pub fn eval(&self, ctx: &Ctx, args: &[Vector]) -> Vector {
        (self.eval)(ctx, args)
    }
}

impl std::fmt::Debug for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Component({}, {:?})", self.label, self.degrees)
    }
}

fn comp(label: impl Into<String>, degrees: Option<&[u32]>, f: impl Fn(&Ctx, &[Vector]) -> Vector + Send + Sync + 'static) -> Component {
    Component { label: label.into(), degrees: degrees.map(<[u32]>::to_vec), eval: Arc::new(f) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Needs {
    Nothing,
    Unit,
    Involution,
}

#[derive(Clone, Debug)]
pub struct IdentityDescriptor {
    pub id: String,
    pub arity: usize,
    pub multilinear: bool,
    /// The identity written out, e.g. `[a,b,a^2] = 0`.
    pub anchor: String,
    pub variables: Vec<&'static str>,
    pub components: Vec<Component>,
    pub needs: Needs,
    pub note: Option<&'static str>,
}

impl IdentityDescriptor {
    fn new(id: impl Into<String>, vars: &[&'static str], anchor: impl Into<String>, components: Vec<Component>) -> Self {
        let multilinear = components
            .iter()
            .all(|c| c.degrees.as_ref().is_some_and(|d| d.iter().all(|&k| k <= 1)));
        IdentityDescriptor {
            id: id.into(),
            arity: vars.len(),
            multilinear,
            anchor: anchor.into(),
            variables: vars.to_vec(),
            components,
            needs: Needs::Nothing,
            note: None,
        }
    }

    fn needs(mut self, n: Needs) -> Self {
        self.needs = n;
        self
    }

    fn note(mut self, n: &'static str) -> Self {
        self.note = Some(n);
        self
    }

    /// Every component has a degree vector, so linearization on basis tuples is conclusive.
    pub fn homogeneous(&self) -> bool {
        self.components.iter().all(|c| c.degrees.is_some())
    }

    pub fn evaluate(&self, ctx: &Ctx, args: &[Vector]) -> Vec<Vector> {
        self.components.iter().map(|c| c.eval(ctx, args)).collect()
    }

    fn applicable(&self, ctx: &Ctx) -> bool {
        match self.needs {
            Needs::Nothing => true,
            Needs::Unit => ctx.functional.is_some(),
            Needs::Involution => ctx.alg.involution().is_some(),
        }
    }
}

fn power_assoc(d: usize) -> IdentityDescriptor {
    let mut comps = Vec::new();
    for s in 3..=d {
        for m in 2..s {
            let n = s - m;
            comps.push(comp(format!("x^{n} x^{m} - x^{s}"), Some(&[s as u32]), move |c, v| {
                vsub(&c.m(&c.pw(&v[0], n), &c.pw(&v[0], m)), &c.pw(&v[0], s))
            }));
        }
    }
    IdentityDescriptor::new(format!("power-assoc({d})"), &["x"], format!("x^n x^m = x^(n+m) for n + m <= {d}"), comps)
}

fn r_number() -> IdentityDescriptor {
    let mut comps = Vec::new();
    for s in 2..=4usize {
        for n in 1..s {
            let m = s - n;
            let deg = [s as u32, 1];
            comps.push(comp(format!("[b,a^{n},a^{m}] + [a^{n},a^{m},b]"), Some(&deg), move |c, v| {
                let (an, am) = (c.pw(&v[0], n), c.pw(&v[0], m));
                vadd(&c.a(&v[1], &an, &am), &c.a(&an, &am, &v[1]))
            }));
            comps.push(comp(format!("[a^{n},b,a^{m}]"), Some(&deg), move |c, v| {
                c.a(&c.pw(&v[0], n), &v[1], &c.pw(&v[0], m))
            }));
        }
    }
    IdentityDescriptor::new("r-number", &["a", "b"], "[b,a^n,a^m] + [a^n,a^m,b] = 0 and [a^n,b,a^m] = 0 for n + m <= 4", comps)
}

fn elementary_l(c: &Ctx, u: &Vector, v: &Vector, w: &Vector, x: &Vector) -> Vector {
    let t1 = c.a(x, &c.a(u, x, v), w);
    let t2 = c.a(u, &c.a(x, x, v), w);
    let t3 = c.a(u, x, &c.a(v, x, w));
    lc(&[(1, &t1), (1, &t2), (-1, &t3)])
}

fn osborn_iv_terms(c: &Ctx, x: &Vector, y: &Vector) -> [Vector; 3] {
    let x2 = c.sq(x);
    let x3 = c.pw(x, 3);
    let x4 = c.pw(x, 4);
    let xy = c.m(x, y);
    let l4 = c.m(x, &c.m(x, &c.m(x, &xy)));
    let x4y = c.m(&x4, y);
    let x_x3y = c.m(x, &c.m(&x3, y));
    let x2y = c.m(&x2, y);
    let x_x_x2y = c.m(x, &c.m(x, &x2y));
    let x2x2_y = c.m(&c.m(&x2, &x2), y);
    let x_x2_xy = c.m(x, &c.m(&x2, &xy));
    let x2_x2y = c.m(&x2, &x2y);
    let x3_xy = c.m(&x3, &xy);
    let x2_x_xy = c.m(&x2, &c.m(x, &xy));
    let h1 = lc(&[(1, &x4y), (-4, &x_x3y), (6, &x_x_x2y), (-3, &l4)]);
    let h2 = lc(&[(-1, &x2x2_y), (5, &x_x3y), (-9, &x_x_x2y), (4, &l4), (1, &x_x2_xy), (1, &x2_x2y), (-1, &x3_xy)]);
    let h3 = lc(&[(1, &x_x_x2y), (1, &x2_x_xy), (-1, &x2_x2y), (-1, &l4)]);
    [h1, h2, h3]
}

/// The `M2` and `M3` sextic forms in one variable.
fn osborn_m_terms(c: &Ctx, x: &Vector) -> [Vector; 3] {
    let x2 = c.sq(x);
    let x3 = c.pw(x, 3);
    let x4 = c.pw(x, 4);
    let x6 = c.pw(x, 6);
    let x2_cubed = c.pw(&x2, 3);
    let x_x_x2x2 = c.m(x, &c.m(x, &c.m(&x2, &x2)));
    let x2x4 = c.m(&x2, &x4);
    let x3x3 = c.m(&x3, &x3);
    let x_x2x3 = c.m(x, &c.m(&x2, &x3));
    let m1 = lc(&[(1, &x6), (-3, &x2x4), (2, &x3x3)]);
    let m2 = lc(&[(3, &x2_cubed), (-3, &x_x_x2x2), (4, &x6), (-6, &x2x4), (2, &x3x3)]);
    let m3 = lc(&[(9, &x2_cubed), (-6, &x_x2x3), (8, &x6), (-18, &x2x4), (7, &x3x3)]);
    [m1, m2, m3]
}

/// `x^6 - 3 x^2 x^4 + 2 x^3 x^3`.
pub fn osborn_m1(ctx: &Ctx, x: &Vector) -> Vector {
    osborn_m_terms(ctx, x)[0].clone()
}

/// `2 x[y,y,x] + 2 y[x,x,y] - x^2 y^2 + (xy)^2` (commutative form of the degree-4 Osborn identity).
pub fn osborn_deg4_residual(ctx: &Ctx, x: &Vector, y: &Vector) -> Vector {
    let t1 = ctx.m(x, &ctx.a(y, y, x));
    let t2 = ctx.m(y, &ctx.a(x, x, y));
    let t3 = ctx.m(&ctx.sq(x), &ctx.sq(y));
    let t4 = ctx.sq(&ctx.m(x, y));
    lc(&[(2, &t1), (2, &t2), (-1, &t3), (1, &t4)])
}

fn malcev_j(c: &Ctx, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let t1 = c.m(&c.m(x, y), z);
    let t2 = c.m(&c.m(y, z), x);
    let t3 = c.m(&c.m(z, x), y);
    lc(&[(1, &t1), (1, &t2), (1, &t3)])
}

/// The full catalog, sorted by id, with `power-assoc` at its default degree.
pub fn catalog() -> Vec<IdentityDescriptor> {
    let mut v = vec![
        IdentityDescriptor::new(
            "alternative-laws",
            &["x", "y"],
            "[x,x,y] = [x,y,x] = [y,x,x] = 0",
            vec![
                comp("[x,x,y]", Some(&[2, 1]), |c, v| c.a(&v[0], &v[0], &v[1])),
                comp("[x,y,x]", Some(&[2, 1]), |c, v| c.a(&v[0], &v[1], &v[0])),
                comp("[y,x,x]", Some(&[2, 1]), |c, v| c.a(&v[1], &v[0], &v[0])),
            ],
        ),
        IdentityDescriptor::new(
            "difference-of-squares",
            &["x", "y"],
            "(x+y)(x-y) = x^2 - y^2",
            vec![comp("(x+y)(x-y) - x^2 + y^2", Some(&[1, 1]), |c, v| {
                let p = c.m(&vadd(&v[0], &v[1]), &vsub(&v[0], &v[1]));
                lc(&[(1, &p), (-1, &c.sq(&v[0])), (1, &c.sq(&v[1]))])
            })],
        ),
        IdentityDescriptor::new(
            "distributivity",
            &["a", "b", "c"],
            "(a+b)c = ac + bc; (a+b)^2 + (a-b)^2 = 2a^2 + 2b^2; (a+b+c)^2 + a^2 + b^2 + c^2 = (a+b)^2 + (b+c)^2 + (c+a)^2",
            vec![
                comp("(a+b)c - ac - bc", None, |c, v| {
                    let l = c.m(&vadd(&v[0], &v[1]), &v[2]);
                    lc(&[(1, &l), (-1, &c.m(&v[0], &v[2])), (-1, &c.m(&v[1], &v[2]))])
                }),
                comp("(a+b)^2 + (a-b)^2 - 2a^2 - 2b^2", None, |c, v| {
                    let s = c.sq(&vadd(&v[0], &v[1]));
                    let d = c.sq(&vsub(&v[0], &v[1]));
                    lc(&[(1, &s), (1, &d), (-2, &c.sq(&v[0])), (-2, &c.sq(&v[1]))])
                }),
                comp("(a+b+c)^2 + a^2 + b^2 + c^2 - (a+b)^2 - (b+c)^2 - (c+a)^2", None, |c, v| {
                    let abc = c.sq(&vadd(&vadd(&v[0], &v[1]), &v[2]));
                    let ab = c.sq(&vadd(&v[0], &v[1]));
                    let bc = c.sq(&vadd(&v[1], &v[2]));
                    let ca = c.sq(&vadd(&v[2], &v[0]));
                    let (a2, b2, c2) = (c.sq(&v[0]), c.sq(&v[1]), c.sq(&v[2]));
                    lc(&[(1, &abc), (1, &a2), (1, &b2), (1, &c2), (-1, &ab), (-1, &bc), (-1, &ca)])
                }),
            ],
        ),
        IdentityDescriptor::new(
            "elementary-L",
            &["u", "v", "w", "x"],
            "L(u,v,w)(x) + L(v,w,u)(x) + L(w,u,v)(x) = 0, L(u,v,w)(x) = [x,[u,x,v],w] + [u,[x,x,v],w] - [u,x,[v,x,w]]",
            vec![comp("cyclic sum of L(u,v,w)(x)", Some(&[1, 1, 1, 2]), |c, v| {
                let (u, vv, w, x) = (&v[0], &v[1], &v[2], &v[3]);
                let a = elementary_l(c, u, vv, w, x);
                let b = elementary_l(c, vv, w, u, x);
                let d = elementary_l(c, w, u, vv, x);
                lc(&[(1, &a), (1, &b), (1, &d)])
            })],
        ),
        IdentityDescriptor::new(
            "elementary-fundamental",
            &["u", "v", "x", "y", "z"],
            "-[[u,v,x],z,y] + [[u,y,x],z,v] + [u,[v,z,y],x] + [y,[u,z,x],v] = 0",
            vec![comp("fundamental sum", Some(&[1, 1, 1, 1, 1]), |c, v| {
                let (u, vv, x, y, z) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
                let t1 = c.a(&c.a(u, vv, x), z, y);
                let t2 = c.a(&c.a(u, y, x), z, vv);
                let t3 = c.a(u, &c.a(vv, z, y), x);
                let t4 = c.a(y, &c.a(u, z, x), vv);
                lc(&[(-1, &t1), (1, &t2), (1, &t3), (1, &t4)])
            })],
        ),
        IdentityDescriptor::new(
            "flexibility",
            &["a", "b"],
            "[a,b,a] = 0",
            vec![comp("[a,b,a]", Some(&[2, 1]), |c, v| c.a(&v[0], &v[1], &v[0]))],
        ),
        IdentityDescriptor::new(
            "involution-axioms",
            &["a", "b"],
            "a++ = a and (ab)+ = b+ a+",
            vec![
                comp("a++ - a", Some(&[1, 0]), |c, v| vsub(&c.star(&c.star(&v[0])), &v[0])),
                comp("(ab)+ - b+ a+", Some(&[1, 1]), |c, v| {
                    vsub(&c.star(&c.m(&v[0], &v[1])), &c.m(&c.star(&v[1]), &c.star(&v[0])))
                }),
            ],
        )
        .needs(Needs::Involution),
        IdentityDescriptor::new(
            "jacobi",
            &["a", "b", "c"],
            "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0",
            vec![comp("Jacobi sum", Some(&[1, 1, 1]), |c, v| {
                let t1 = c.br(&v[0], &c.br(&v[1], &v[2]));
                let t2 = c.br(&v[1], &c.br(&v[2], &v[0]));
                let t3 = c.br(&v[2], &c.br(&v[0], &v[1]));
                lc(&[(1, &t1), (1, &t2), (1, &t3)])
            })],
        ),
        IdentityDescriptor::new(
            "jordan-identity",
            &["a", "b"],
            "[a,b,a^2] = 0 and [b,a,a^2] + [a,a^2,b] = 0",
            vec![
                comp("[a,b,a^2]", Some(&[3, 1]), |c, v| c.a(&v[0], &v[1], &c.sq(&v[0]))),
                comp("[b,a,a^2] + [a,a^2,b]", Some(&[3, 1]), |c, v| {
                    let a2 = c.sq(&v[0]);
                    vadd(&c.a(&v[1], &v[0], &a2), &c.a(&v[0], &a2, &v[1]))
                }),
            ],
        ),
        IdentityDescriptor::new(
            "k-number-trio",
            &["a", "b", "c", "d"],
            "{a,b,c} + {b,c,a} + {c,a,b} = 0; [a,d,bxc] + [b,d,cxa] + [c,d,axb] = 0; [a,bxc,d] = bx[a,c,d] + [a,b,d]xc",
            vec![
                comp("{a,b,c} + {b,c,a} + {c,a,b}", Some(&[1, 1, 1, 0]), |c, v| {
                    let t1 = c.qa(&v[0], &v[1], &v[2]);
                    let t2 = c.qa(&v[1], &v[2], &v[0]);
                    let t3 = c.qa(&v[2], &v[0], &v[1]);
                    lc(&[(1, &t1), (1, &t2), (1, &t3)])
                }),
                comp("[a,d,bxc] + [b,d,cxa] + [c,d,axb]", Some(&[1, 1, 1, 1]), |c, v| {
                    let (a, b, cc, d) = (&v[0], &v[1], &v[2], &v[3]);
                    let t1 = c.a(a, d, &c.qm(b, cc));
                    let t2 = c.a(b, d, &c.qm(cc, a));
                    let t3 = c.a(cc, d, &c.qm(a, b));
                    lc(&[(1, &t1), (1, &t2), (1, &t3)])
                }),
                comp("[a,bxc,d] - bx[a,c,d] - [a,b,d]xc", Some(&[1, 1, 1, 1]), |c, v| {
                    let (a, b, cc, d) = (&v[0], &v[1], &v[2], &v[3]);
                    let t1 = c.a(a, &c.qm(b, cc), d);
                    let t2 = c.qm(b, &c.a(a, cc, d));
                    let t3 = c.qm(&c.a(a, b, d), cc);
                    lc(&[(1, &t1), (-1, &t2), (-1, &t3)])
                }),
            ],
        ),
        IdentityDescriptor::new(
            "lie-triple",
            &["x", "y", "z", "u"],
            "[x,y^2,z] = 2y[x,y,z] and [x,yu,z] = y[x,u,z] + u[x,y,z]",
            vec![
                comp("[x,y^2,z] - 2y[x,y,z]", Some(&[1, 2, 1, 0]), |c, v| {
                    let l = c.a(&v[0], &c.sq(&v[1]), &v[2]);
                    let r = c.m(&v[1], &c.a(&v[0], &v[1], &v[2]));
                    lc(&[(1, &l), (-2, &r)])
                }),
                comp("[x,yu,z] - y[x,u,z] - u[x,y,z]", Some(&[1, 1, 1, 1]), |c, v| {
                    let (x, y, z, u) = (&v[0], &v[1], &v[2], &v[3]);
                    let l = c.a(x, &c.m(y, u), z);
                    let r1 = c.m(y, &c.a(x, u, z));
                    let r2 = c.m(u, &c.a(x, y, z));
                    lc(&[(1, &l), (-1, &r1), (-1, &r2)])
                }),
            ],
        ),
        IdentityDescriptor::new(
            "lie-triple-power-aux",
            &["x"],
            "3x(x^2 x^n) = x^3 x^n + 2x^(n+3) for n = 1, 2, 3",
            (1..=3usize)
                .map(|n| {
                    comp(format!("3x(x^2 x^{n}) - x^3 x^{n} - 2x^{}", n + 3), Some(&[(n + 3) as u32]), move |c, v| {
                        let x = &v[0];
                        let xn = c.pw(x, n);
                        let t1 = c.m(x, &c.m(&c.sq(x), &xn));
                        let t2 = c.m(&c.pw(x, 3), &xn);
                        let t3 = c.pw(x, n + 3);
                        lc(&[(3, &t1), (-1, &t2), (-2, &t3)])
                    })
                })
                .collect(),
        ),
        IdentityDescriptor::new(
            "malcev",
            &["x", "y", "z"],
            "x^2 = 0, J(x,y,xz) = J(x,y,z)x, (xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y",
            vec![
                comp("J(x,y,xz) - J(x,y,z)x", Some(&[2, 1, 1]), |c, v| {
                    let (x, y, z) = (&v[0], &v[1], &v[2]);
                    vsub(&malcev_j(c, x, y, &c.m(x, z)), &c.m(&malcev_j(c, x, y, z), x))
                }),
                comp("(xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y", Some(&[2, 1, 1]), |c, v| {
                    let (x, y, z) = (&v[0], &v[1], &v[2]);
                    let (xy, yz, zx) = (c.m(x, y), c.m(y, z), c.m(z, x));
                    let l = c.m(&xy, &c.m(x, z));
                    let r1 = c.m(&c.m(&xy, z), x);
                    let r2 = c.m(&c.m(&yz, x), x);
                    let r3 = c.m(&c.m(&zx, x), y);
                    lc(&[(1, &l), (-1, &r1), (-1, &r2), (-1, &r3)])
                }),
                comp("x^2", Some(&[2, 0, 0]), |c, v| c.sq(&v[0])),
            ],
        ),
        IdentityDescriptor::new(
            "moufang",
            &["x", "y", "z"],
            "(xy)(zx) = (x(yz))x",
            vec![comp("(xy)(zx) - (x(yz))x", Some(&[2, 1, 1]), |c, v| {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                vsub(&c.m(&c.m(x, y), &c.m(z, x)), &c.m(&c.m(x, &c.m(y, z)), x))
            })],
        ),
        IdentityDescriptor::new(
            "osborn-IV",
            &["x", "y"],
            "H1 + H2 + H3 = 0, H1 + H3 = 0, H2 = 0",
            vec![
                comp("H1 + H2 + H3", Some(&[4, 1]), |c, v| {
                    let [h1, h2, h3] = osborn_iv_terms(c, &v[0], &v[1]);
                    lc(&[(1, &h1), (1, &h2), (1, &h3)])
                }),
                comp("H1 + H3", Some(&[4, 1]), |c, v| {
                    let [h1, _, h3] = osborn_iv_terms(c, &v[0], &v[1]);
                    vadd(&h1, &h3)
                }),
                comp("H2", Some(&[4, 1]), |c, v| osborn_iv_terms(c, &v[0], &v[1])[1].clone()),
            ],
        ),
        IdentityDescriptor::new(
            "osborn-K",
            &["x", "y"],
            "K2 = -[[x,x,y],x,y] - [[y,y,x],x,x] = 0",
            vec![comp("K2", Some(&[3, 2]), |c, v| {
                let (x, y) = (&v[0], &v[1]);
                let t1 = c.a(&c.a(x, x, y), x, y);
                let t2 = c.a(&c.a(y, y, x), x, x);
                lc(&[(-1, &t1), (-1, &t2)])
            })],
        )
        .note(K3_NOTE),
        IdentityDescriptor::new(
            "osborn-deg4",
            &["x", "y", "z"],
            "2[x,x,y^2] + 2[y,y,x^2] - 2[x,y,xy] - 2[y,x,xy] = 3x^2y^2 - 3(xy)^2, its commutative and linearized forms, and the sextic specialization",
            vec![
                comp("2[x,x,y^2] + 2[y,y,x^2] - 2[x,y,xy] - 2[y,x,xy] - 3x^2y^2 + 3(xy)^2", Some(&[2, 2, 0]), |c, v| {
                    let (x, y) = (&v[0], &v[1]);
                    let (x2, y2, xy) = (c.sq(x), c.sq(y), c.m(x, y));
                    let t1 = c.a(x, x, &y2);
                    let t2 = c.a(y, y, &x2);
                    let t3 = c.a(x, y, &xy);
                    let t4 = c.a(y, x, &xy);
                    let t5 = c.m(&x2, &y2);
                    let t6 = c.sq(&xy);
                    lc(&[(2, &t1), (2, &t2), (-2, &t3), (-2, &t4), (-3, &t5), (3, &t6)])
                }),
                comp("2x[y,y,x] + 2y[x,x,y] - x^2y^2 + (xy)^2", Some(&[2, 2, 0]), |c, v| osborn_deg4_residual(c, &v[0], &v[1])),
                comp("x[z,z,y] + y[z,z,x] + z[x,y,z] + z[y,x,z] - z^2(xy) + (zx)(zy)", Some(&[1, 1, 2]), |c, v| {
                    let (x, y, z) = (&v[0], &v[1], &v[2]);
                    let t1 = c.m(x, &c.a(z, z, y));
                    let t2 = c.m(y, &c.a(z, z, x));
                    let t3 = c.m(z, &c.a(x, y, z));
                    let t4 = c.m(z, &c.a(y, x, z));
                    let t5 = c.m(&c.sq(z), &c.m(x, y));
                    let t6 = c.m(&c.m(z, x), &c.m(z, y));
                    lc(&[(1, &t1), (1, &t2), (1, &t3), (1, &t4), (-1, &t5), (1, &t6)])
                }),
                comp("2x(x(x^2x^2)) + (x^2)^3 + x^3x^3 - 2x(x^2x^3) - 2x^2x^4", Some(&[6, 0, 0]), |c, v| {
                    let x = &v[0];
                    let x2 = c.sq(x);
                    let x3 = c.pw(x, 3);
                    let t1 = c.m(x, &c.m(x, &c.m(&x2, &x2)));
                    let t2 = c.pw(&x2, 3);
                    let t3 = c.m(&x3, &x3);
                    let t4 = c.m(x, &c.m(&x2, &x3));
                    let t5 = c.m(&x2, &c.pw(x, 4));
                    lc(&[(2, &t1), (1, &t2), (1, &t3), (-2, &t4), (-2, &t5)])
                }),
            ],
        ),
        IdentityDescriptor::new(
            "osborn-deg5-FG",
            &["x", "y", "z"],
            "2F1 + F2 = 0 and -G1 + 2G2 = 0",
            vec![
                comp("2F1 + F2", Some(&[3, 1, 1]), |c, v| {
                    let (x, y, z) = (&v[0], &v[1], &v[2]);
                    let (xxz, xxy) = (c.a(x, x, z), c.a(x, x, y));
                    let f1 = vsub(&c.a(y, &xxz, x), &c.a(z, &xxy, x));
                    let f2 = lc(&[(1, &c.a(&c.a(y, x, z), x, x)), (1, &c.a(&xxy, x, z)), (-1, &c.a(&xxz, x, y))]);
                    lc(&[(2, &f1), (1, &f2)])
                }),
                comp("-G1 + 2G2", Some(&[2, 2, 1]), |c, v| {
                    let (x, y, z) = (&v[0], &v[1], &v[2]);
                    let (xyy, yxx) = (c.a(x, y, y), c.a(y, x, x));
                    let g1 = lc(&[
                        (1, &c.a(x, x, &c.a(y, y, z))),
                        (1, &c.a(y, y, &c.a(x, x, z))),
                        (1, &c.a(y, x, &c.a(z, y, x))),
                        (1, &c.a(x, y, &c.a(z, x, y))),
                        (1, &c.a(z, x, &xyy)),
                        (1, &c.a(z, y, &yxx)),
                    ]);
                    let g2 = lc(&[(1, &c.a(x, &c.a(x, z, y), y)), (1, &c.a(z, &xyy, x)), (1, &c.a(z, &yxx, y))]);
                    lc(&[(-1, &g1), (2, &g2)])
                }),
            ],
        ),
        IdentityDescriptor::new(
            "osborn-deg6-M",
            &["x"],
            "zeta2 M2 + zeta3 M3 = 0 with zeta2 / zeta3 = -2",
            vec![comp("M3 - 2M2", Some(&[6]), |c, v| {
                let [_, m2, m3] = osborn_m_terms(c, &v[0]);
                lc(&[(1, &m3), (-2, &m2)])
            })],
        ),
        power_assoc(DEFAULT_POWER_DEGREE),
        IdentityDescriptor::new(
            "quasi-assoc",
            &["a", "b", "c"],
            "{a,b,c} = (lambda+mu)^2 [a,b,c] + lambda mu [b,[a,c]]",
            vec![comp("{a,b,c} - (lambda+mu)^2 [a,b,c] - lambda mu [b,[a,c]]", Some(&[1, 1, 1]), |c, v| {
                let s = &c.lambda + &c.mu;
                quasi_residual(c, v, &s * &s)
            })],
        ),
        IdentityDescriptor::new(
            "quasi-assoc-quarter",
            &["a", "b", "c"],
            "{a,b,c} = (lambda+mu)^2/4 [a,b,c] + lambda mu [b,[a,c]]",
            vec![comp("{a,b,c} - (lambda+mu)^2/4 [a,b,c] - lambda mu [b,[a,c]]", Some(&[1, 1, 1]), |c, v| {
                let s = &c.lambda + &c.mu;
                quasi_residual(c, v, &s * &s * q(1, 4))
            })],
        ),
        r_number(),
        IdentityDescriptor::new(
            "variance",
            &["a"],
            "f((f(a)e - a)^2) = f(a^2) - f(a)^2 for a linear form f",
            vec![comp("f((f(a)e - a)^2) - f(a^2) + f(a)^2", Some(&[2]), |c, v| {
                let a = &v[0];
                let la = c.lam(a);
                let u = c.alg.unit().expect("unit checked by caller");
                let dev = vsub(&vscale(&la, u), a);
                vec![c.lam(&c.sq(&dev)) - c.lam(&c.sq(a)) + &la * &la]
            })],
        )
        .needs(Needs::Unit),
        IdentityDescriptor::new(
            "weak-distributivity",
            &["a", "b", "c"],
            "(a-b)c + (b-c)a + (c-a)b = 0",
            vec![comp("(a-b)c + (b-c)a + (c-a)b", None, |c, v| {
                let (a, b, cc) = (&v[0], &v[1], &v[2]);
                let t1 = c.m(&vsub(a, b), cc);
                let t2 = c.m(&vsub(b, cc), a);
                let t3 = c.m(&vsub(cc, a), b);
                lc(&[(1, &t1), (1, &t2), (1, &t3)])
            })],
        ),
    ];
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

fn quasi_residual(c: &Ctx, v: &[Vector], coef: Rational) -> Vector {
    let (a, b, cc) = (&v[0], &v[1], &v[2]);
    let l = c.qa(a, b, cc);
    let r1 = vscale(&coef, &c.a(a, b, cc));
    let r2 = vscale(&(&c.lambda * &c.mu), &c.br(b, &c.br(a, cc)));
    vsub(&vsub(&l, &r1), &r2)
}

/// Looks up an id; `power-assoc(d)` accepts any `d >= 3`.
pub fn resolve(id: &str) -> Result<IdentityDescriptor, IdentityError> {
    if let Some(rest) = id.strip_prefix("power-assoc(").and_then(|r| r.strip_suffix(')')) {
        let d: usize = rest.parse().map_err(|_| IdentityError::Unknown(id.to_string()))?;
        if !(3..=12).contains(&d) {
            return Err(IdentityError::Unknown(id.to_string()));
        }
        return Ok(power_assoc(d));
    }
    if id == "power-assoc" {
        return Ok(power_assoc(DEFAULT_POWER_DEGREE));
    }
    catalog().into_iter().find(|d| d.id == id).ok_or_else(|| IdentityError::Unknown(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Basis enumeration when the identity is homogeneous and small enough; otherwise
    /// [`DEFAULT_TRIALS`] random trials with [`DEFAULT_SEED`].
    ExhaustiveIfMultilinear,
    /// As [`Mode::ExhaustiveIfMultilinear`], with the fallback trials drawn from `seed`.
    Seeded { seed: u64 },
    Randomized { trials: usize, seed: u64 },
    Both { trials: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    HoldsExhaustive,
    HoldsRandomized,
    Fails,
    NotApplicable,
}

impl Status {
    pub fn holds(self) -> bool {
        matches!(self, Status::HoldsExhaustive | Status::HoldsRandomized)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Holds,
    Fails,
}

fn ser_witness<S: Serializer>(w: &Option<Vec<Vector>>, s: S) -> Result<S::Ok, S::Error> {
    let strs: Option<Vec<Vec<String>>> = w.as_ref().map(|w| w.iter().map(|v| v.iter().map(fmt_rational).collect()).collect());
    strs.serialize(s)
}

fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    r.as_ref().map(fmt_rational).serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub algebra: String,
    pub status: Status,
    /// Basis tuples enumerated for the linearized check.
    pub exhaustive_tuples: Option<u64>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    /// Label of the failing component.
    pub component: Option<String>,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Vec<Vector>>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub residual_norm: Option<Rational>,
    pub expected: Option<Expectation>,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(desc: &IdentityDescriptor, alg: &StructureAlgebra, status: Status) -> Self {
        IdentityReport {
            identity: desc.id.clone(),
            algebra: alg.name().to_string(),
            status,
            exhaustive_tuples: None,
            trials: None,
            seed: None,
            component: None,
            witness: None,
            residual_norm: None,
            expected: expectation(alg.name(), &desc.id),
            note: desc.note.map(str::to_string),
        }
    }

    /// Status contradicts the expectation table.
    pub fn surprise(&self) -> bool {
        match self.expected {
            Some(Expectation::Holds) => self.status == Status::Fails,
            Some(Expectation::Fails) => self.status.holds(),
            None => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    fn add_note(&mut self, n: impl Into<String>) {
        let n = n.into();
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {n}"),
            None => n,
        });
    }
}

fn binom(n: u64, k: u64) -> u64 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Number of evaluations the linearized basis check of `degrees` needs.
pub fn exhaustive_cost(dim: usize, degrees: &[u32]) -> u64 {
    let mut cost: u64 = 1;
    for &d in degrees {
        if d == 0 {
            continue;
        }
        let tuples = binom(dim as u64 + d as u64 - 1, d as u64);
        let subsets = if d == 1 { 1 } else { (1u64 << d) - 1 };
        cost = cost.saturating_mul(tuples).saturating_mul(subsets);
    }
    cost
}

fn multisets(dim: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; d];
    if d == 0 {
        return vec![Vec::new()];
    }
    loop {
        out.push(cur.clone());
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < dim {
                cur[i] += 1;
                let v = cur[i];
                for c in cur.iter_mut().skip(i + 1) {
                    *c = v;
                }
                break;
            }
        }
    }
}

/// Signed sums `(sign, sum_{p in S} e_{ms[p]})` for nonempty subsets `S`.
fn polarization_terms(dim: usize, ms: &[usize]) -> Vec<(i64, Vector)> {
    let d = ms.len();
    if d == 0 {
        return vec![(1, vzero(dim))];
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << d) {
        let mut v = vzero(dim);
        for (p, &j) in ms.iter().enumerate() {
            if mask & (1 << p) != 0 {
                v[j] += qi(1);
            }
        }
        let sign = if (d as u32 - mask.count_ones()) % 2 == 0 { 1 } else { -1 };
        out.push((sign, v));
    }
    out
}

fn linearized_value(ctx: &Ctx, comp: &Component, terms: &[Vec<(i64, Vector)>]) -> Vector {
    let k = terms.len();
    let mut idx = vec![0usize; k];
    let mut acc: Option<Vector> = None;
    loop {
        let sign: i64 = idx.iter().enumerate().map(|(i, &j)| terms[i][j].0).product();
        let args: Vec<Vector> = idx.iter().enumerate().map(|(i, &j)| terms[i][j].1.clone()).collect();
        let r = comp.eval(ctx, &args);
        acc = Some(match acc {
            None => vscale(&qi(sign), &r),
            Some(a) => lc(&[(1, &a), (sign, &r)]),
        });
        let mut i = 0;
        loop {
            if i == k {
                return acc.expect("at least one term");
            }
            idx[i] += 1;
            if idx[i] < terms[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

enum Exhaustive {
    Holds(u64),
    Fails { tuple: Vec<Vec<usize>> },
    Infeasible,
}

fn exhaustive_component(ctx: &Ctx, comp: &Component) -> Exhaustive {
    let Some(degrees) = &comp.degrees else { return Exhaustive::Infeasible };
    let dim = ctx.dim();
    if exhaustive_cost(dim, degrees) > EXHAUSTIVE_BUDGET {
        return Exhaustive::Infeasible;
    }
    let sets: Vec<Vec<Vec<usize>>> = degrees.iter().map(|&d| multisets(dim, d as usize)).collect();
    let polar: Vec<Vec<Vec<(i64, Vector)>>> =
        sets.iter().map(|ss| ss.iter().map(|ms| polarization_terms(dim, ms)).collect()).collect();
    let k = sets.len();
    let mut idx = vec![0usize; k];
    let mut count = 0u64;
    loop {
        let terms: Vec<Vec<(i64, Vector)>> = idx.iter().enumerate().map(|(i, &j)| polar[i][j].clone()).collect();
        count += 1;
        if !vis_zero(&linearized_value(ctx, comp, &terms)) {
            return Exhaustive::Fails { tuple: idx.iter().enumerate().map(|(i, &j)| sets[i][j].clone()).collect() };
        }
        let mut i = 0;
        loop {
            if i == k {
                return Exhaustive::Holds(count);
            }
            idx[i] += 1;
            if idx[i] < sets[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Turns a failing linearized tuple into arguments of the original identity by trying
/// random positive weights on the basis copies.
fn direct_witness(ctx: &Ctx, comp: &Component, tuple: &[Vec<usize>], seed: u64) -> Option<Vec<Vector>> {
    let dim = ctx.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..64 {
        let args: Vec<Vector> = tuple
            .iter()
            .map(|ms| {
                let mut v = vzero(dim);
                for &j in ms {
                    let t: i64 = if attempt == 0 { 1 } else { rng.gen_range(1..=9) };
                    v[j] += qi(t);
                }
                v
            })
            .collect();
        if !vis_zero(&comp.eval(ctx, &args)) {
            return Some(args);
        }
    }
    None
}

fn trial_args(dim: usize, arity: usize, seed: u64, trial: usize) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    (0..arity).map(|_| random_vector(&mut rng, dim)).collect()
}

/// `x` times the lcm of its denominators.
fn clear_denominators(x: &[Rational]) -> Vector {
    use num_integer::Integer;
    let l = x.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let l = Rational::from_integer(l);
    x.iter().map(|c| c * &l).collect()
}

fn fail(report: &mut IdentityReport, ctx: &Ctx, comp: &Component, witness: Vec<Vector>) {
    let r = comp.eval(ctx, &witness);
    assert!(!vis_zero(&r), "witness re-verification");
    report.status = Status::Fails;
    report.component = Some(comp.label.clone());
    report.residual_norm = Some(l1_norm(&r));
    report.witness = Some(witness);
}

/// Checks one descriptor with the given context.
pub fn check_descriptor(ctx: &Ctx, desc: &IdentityDescriptor, mode: Mode) -> IdentityReport {
    let mut report = IdentityReport::new(desc, ctx.alg, Status::HoldsRandomized);
    if !desc.applicable(ctx) {
        report.status = Status::NotApplicable;
        report.add_note(match desc.needs {
            Needs::Unit => "algebra has no unit",
            _ => "algebra has no involution",
        });
        return report;
    }
    let (try_exhaustive, trials, seed) = match mode {
        Mode::ExhaustiveIfMultilinear => (true, None, DEFAULT_SEED),
        Mode::Seeded { seed } => (true, None, seed),
        Mode::Randomized { trials, seed } => (false, Some(trials), seed),
        Mode::Both { trials, seed } => (true, Some(trials), seed),
    };
    let mut exhaustive_ok = false;
    if try_exhaustive && desc.homogeneous() {
        let mut total = 0u64;
        let mut all = true;
        for comp in &desc.components {
            match exhaustive_component(ctx, comp) {
                Exhaustive::Holds(n) => total += n,
                Exhaustive::Infeasible => all = false,
                Exhaustive::Fails { tuple } => {
                    report.exhaustive_tuples = Some(total);
                    report.seed = Some(seed);
                    match direct_witness(ctx, comp, &tuple, seed) {
                        Some(w) => fail(&mut report, ctx, comp, w),
                        None => {
                            report.status = Status::Fails;
                            report.component = Some(comp.label.clone());
                            report.add_note(format!("linearization nonzero on basis multisets {tuple:?}"));
                        }
                    }
                    return report;
                }
            }
        }
        if all {
            exhaustive_ok = true;
            report.exhaustive_tuples = Some(total);
            report.status = Status::HoldsExhaustive;
        }
    }
    let trials = match (trials, exhaustive_ok) {
        (Some(t), _) => t,
        (None, true) => return report,
        (None, false) => DEFAULT_TRIALS,
    };
    report.seed = Some(seed);
    let dim = ctx.dim();
    for t in 0..trials {
        let args = trial_args(dim, desc.arity, seed, t);
        // Homogeneous residuals vanish at x iff they vanish at a nonzero multiple of x.
        let scaled: Vec<Vector> = args.iter().map(|x| clear_denominators(x)).collect();
        for comp in &desc.components {
            let at = if comp.degrees.is_some() { &scaled } else { &args };
            if !vis_zero(&comp.eval(ctx, at)) {
                report.trials = Some(t + 1);
                fail(&mut report, ctx, comp, args);
                return report;
            }
        }
    }
    report.trials = Some(trials);
    report
}

pub fn check_identity(alg: &StructureAlgebra, id: &str, mode: Mode) -> Result<IdentityReport, IdentityError> {
    let desc = resolve(id)?;
    Ok(check_descriptor(&Ctx::new(alg), &desc, mode))
}

pub const PROFILES: [&str; 7] = ["all", "alternative", "distributive", "elementary", "jordan", "lie", "osborn"];

pub fn profile_ids(profile: &str) -> Result<Vec<String>, IdentityError> {
    let ids: Vec<&str> = match profile {
        "all" => return Ok(catalog().into_iter().map(|d| d.id).collect()),
        "alternative" => vec!["alternative-laws", "flexibility", "jordan-identity", "moufang"],
        "distributive" => vec!["difference-of-squares", "distributivity", "weak-distributivity"],
        "elementary" => vec!["elementary-L", "elementary-fundamental", "lie-triple"],
        "jordan" => vec!["flexibility", "jordan-identity", "power-assoc(5)", "power-assoc(6)"],
        "lie" => vec!["jacobi", "malcev"],
        "osborn" => vec!["lie-triple-power-aux", "osborn-IV", "osborn-K", "osborn-deg4", "osborn-deg5-FG", "osborn-deg6-M"],
        _ => return Err(IdentityError::UnknownProfile(profile.to_string())),
    };
    Ok(ids.into_iter().map(str::to_string).collect())
}

/// Runs a profile; reports sorted by identity id.
pub fn check_all(alg: &StructureAlgebra, profile: &str, mode: Mode) -> Result<Vec<IdentityReport>, IdentityError> {
    let ctx = Ctx::new(alg);
    let mut out = Vec::new();
    for id in profile_ids(profile)? {
        out.push(check_descriptor(&ctx, &resolve(&id)?, mode));
    }
    out.sort_by(|a, b| a.identity.cmp(&b.identity));
    Ok(out)
}

/// Known statuses of built-in algebras.
pub fn expectation(algebra: &str, id: &str) -> Option<Expectation> {
    use Expectation::{Fails as F, Holds as H};
    let power = id.starts_with("power-assoc");
    let assoc_laws = [
        "alternative-laws",
        "flexibility",
        "jordan-identity",
        "moufang",
        "jacobi",
        "r-number",
        "k-number-trio",
        "quasi-assoc",
        "quasi-assoc-quarter",
        "elementary-L",
        "elementary-fundamental",
        "involution-axioms",
        "variance",
    ];
    let jordan = ["jordan-identity", "flexibility", "lie-triple", "osborn-IV"];
    let always = ["distributivity"];
    if always.contains(&id) {
        return Some(H);
    }
    match algebra {
        "octonions" => match id {
            "alternative-laws" | "flexibility" | "moufang" | "jordan-identity" | "involution-axioms" => Some(H),
            "jacobi" | "difference-of-squares" | "weak-distributivity" => Some(F),
            _ if power => Some(H),
            _ => None,
        },
        "quaternions" | "M2" => match id {
            _ if power || assoc_laws.contains(&id) => Some(H),
            "difference-of-squares" | "weak-distributivity" => Some(F),
            _ => None,
        },
        "dual-numbers" | "complex-as-real" => Some(if id == "malcev" { F } else { H }),
        "H2" | "H3" | "l44pp" | "M2+" => match id {
            _ if power || jordan.contains(&id) => Some(H),
            _ => None,
        },
        "H4" | "l66pp" => match id {
            _ if power => Some(F),
            "jordan-identity" => Some(F),
            _ => None,
        },
        "U3" | "U4" => match id {
            "elementary-L" | "elementary-fundamental" => Some(H),
            _ if power && algebra == "U4" => Some(F),
            _ => None,
        },
        "U5" => match id {
            "elementary-L" | "elementary-fundamental" => Some(F),
            _ => None,
        },
        "imag-octonions-commutator" => match id {
            "malcev" => Some(H),
            "jacobi" => Some(F),
            _ => None,
        },
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(4, 2).len(), 10);
        assert_eq!(multisets(3, 3).len(), 10);
        assert_eq!(exhaustive_cost(8, &[2, 1]), 36 * 3 * 8);
    }

    #[test]
    fn catalog_is_sorted_and_zero_safe() {
        let cat = catalog();
        assert!(cat.windows(2).all(|w| w[0].id < w[1].id));
        let o = builtin::octonions();
        let ctx = Ctx::new(&o);
        for d in &cat {
            let zeros = vec![vzero(8); d.arity];
            for r in d.evaluate(&ctx, &zeros) {
                assert!(vis_zero(&r), "{}", d.id);
            }
        }
    }

    #[test]
    fn resolve_power_assoc() {
        let d = resolve("power-assoc(4)").unwrap();
        assert_eq!(d.components.len(), 3);
        assert!(resolve("power-assoc(x)").is_err());
        assert!(resolve("nope").is_err());
    }

    #[test]
    fn linearized_flexibility_on_octonions() {
        let o = builtin::octonions();
        let r = check_identity(&o, "flexibility", Mode::ExhaustiveIfMultilinear).unwrap();
        assert_eq!(r.status, Status::HoldsExhaustive);
        let r = check_identity(&o, "jacobi", Mode::ExhaustiveIfMultilinear).unwrap();
        assert_eq!(r.status, Status::Fails);
        assert!(r.witness.is_some());
    }
}
