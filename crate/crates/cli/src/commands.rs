use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::json;
use symplectic_frieze::arith::float_tolerance;
use symplectic_frieze::cluster::{evaluate_frieze, formal_frieze, BeltSign, Seed};
use symplectic_frieze::legendrian::{
    coeffs_from_polygon, frieze_from_polygon, normalize_lift, polygon_from_frieze, Polygon, SymplecticForm,
};
use symplectic_frieze::search::{dihedral_orbits, enumerate, Dedup, SearchConfig};
use symplectic_frieze::slfrieze::{black_of, symplectic_of};
use symplectic_frieze::{
    ComplexFloat, FriezeGrid, Gaussian, Rational, Scalar, ScalarKind, SymmetricDiffEq, ZigZag, ZigZagShape,
};

use crate::error::CliError;
use crate::format::{
    kind_of, list_text, matrix_text, polygon_parse, polygon_to_text, sl_parse, sl_to_text, Format, FriezeDocument,
};
use crate::{read_input, ClusterCmd, Coeffs, DedupArg, EqCmd, FriezeCmd, Outcome, PolygonCmd, SearchCmd, SlCmd};

pub struct Context {
    pub kind: Option<ScalarKind>,
    pub format: Format,
}

impl Context {
    fn kind(&self) -> ScalarKind {
        self.kind.unwrap_or(ScalarKind::Rational)
    }

    fn kind_for(&self, input: &str) -> ScalarKind {
        self.kind.or_else(|| kind_of(input)).unwrap_or(ScalarKind::Rational)
    }
}

/// Runs `$body` with `$t` bound to the scalar type named by `$kind`.
macro_rules! with_scalar {
    ($kind:expr, $t:ident => $body:expr) => {
        match $kind {
            ScalarKind::Rational => {
                type $t = Rational;
                $body
            }
            ScalarKind::Gaussian => {
                type $t = Gaussian;
                $body
            }
            ScalarKind::ComplexFloat => {
                type $t = ComplexFloat;
                $body
            }
            ScalarKind::Laurent => Err(CliError::Usage("laurent scalars are output only".into())),
        }
    };
}

fn fail(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_list<T: Scalar>(flag: &str, raw: &str) -> Result<Vec<T>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| T::parse_scalar(t).ok_or_else(|| CliError::Usage(format!("--{flag}: `{t}` is not a {} scalar", T::KIND))))
        .collect()
}

fn parse_ints(flag: &str, raw: &str) -> Result<Vec<i64>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("--{flag}: `{t}` is not an integer"))))
        .collect()
}

fn parse_word(raw: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    parse_ints("word", raw)?
        .into_iter()
        .map(|k| {
            if k >= 1 && (k as usize) <= rank {
                Ok(k as usize - 1)
            } else {
                Err(CliError::Usage(format!("--word: vertex {k} is outside 1..={rank}")))
            }
        })
        .collect()
}

fn render<T: Scalar>(ctx: &Context, doc: FriezeDocument<T>) -> String {
    doc.render(ctx.format)
}

pub fn frieze(ctx: &Context, cmd: FriezeCmd) -> Result<Outcome, CliError> {
    match cmd {
        FriezeCmd::FromCoeffs(c) => with_scalar!(ctx.kind(), T => from_coeffs::<T>(ctx, &c)),
        FriezeCmd::FromZigzag { width, values, columns } => {
            with_scalar!(ctx.kind(), T => from_zigzag::<T>(ctx, width, &values, columns.as_deref()))
        }
        FriezeCmd::Verify(i) => {
            let text = read_input(&i)?;
            with_scalar!(ctx.kind_for(&text), T => verify::<T>(&text))
        }
        FriezeCmd::Show(i) => {
            let text = read_input(&i)?;
            with_scalar!(ctx.kind_for(&text), T => FriezeDocument::<T>::parse(&text).map(|d| Outcome::ok(render(ctx, d))))
        }
        FriezeCmd::Twist(i) => {
            let text = read_input(&i)?;
            with_scalar!(ctx.kind_for(&text), T => {
                let twisted = FriezeDocument::<T>::parse(&text)?.grid.sign_twist();
                let broken = twisted.check_local_rules().first().map(|v| format!("twisted array breaks the {:?} rule at {}", v.rule, v.at));
                Ok(Outcome { text: render(ctx, FriezeDocument::new(twisted)), failed: broken })
            })
        }
    }
}

fn from_coeffs<T: Scalar>(ctx: &Context, c: &Coeffs) -> Result<Outcome, CliError> {
    let a = parse_list::<T>("a", &c.a)?;
    let b = parse_list::<T>("b", &c.b)?;
    let g = FriezeGrid::from_coeffs(&a, &b).map_err(fail)?;
    let doc = FriezeDocument::new(g).with_provenance(json!({"from": "coeffs", "a": list_text(&a), "b": list_text(&b)}));
    Ok(Outcome::ok(render(ctx, doc)))
}

fn from_zigzag<T: Scalar>(ctx: &Context, width: usize, values: &str, columns: Option<&str>) -> Result<Outcome, CliError> {
    let vals = parse_list::<T>("values", values)?;
    let shape = match columns {
        Some(c) => ZigZagShape::new(parse_ints("columns", c)?).map_err(fail)?,
        None => ZigZagShape::straight(width, 1),
    };
    if shape.width() != width {
        return Err(CliError::Usage(format!("--columns has {} rows, width is {width}", shape.width())));
    }
    let z = ZigZag::new(shape.clone(), vals).map_err(fail)?;
    let g = FriezeGrid::from_zigzag(&z).map_err(fail)?;
    let doc = FriezeDocument::new(g).with_provenance(json!({
        "from": "zigzag",
        "columns": shape.columns(),
        "values": list_text(&z.values),
    }));
    Ok(Outcome::ok(render(ctx, doc)))
}

fn verify<T: Scalar>(text: &str) -> Result<Outcome, CliError> {
    let g = FriezeDocument::<T>::parse(text)?.grid;
    let mut out = String::from("local rules: ok\n");
    let tame = g.check_tame();
    let mut failure = None;
    match &tame.violation {
        None => out.push_str("tame: ok\n"),
        Some(v) => {
            let why = format!(
                "{0}x{0} window with corner {1} has determinant {2}, expected {3}",
                v.size,
                v.corner,
                v.value.canonical(),
                v.expected.canonical()
            );
            let _ = writeln!(out, "tame: no ({why})");
            failure = Some(why);
        }
    }
    let glide = g.check_glide();
    let _ = writeln!(out, "glide: {}", if glide { "ok" } else { "no" });
    if !glide && failure.is_none() {
        failure = Some("glide symmetry fails".into());
    }
    let _ = writeln!(out, "period: {}", g.check_periodicity());
    Ok(Outcome { text: out, failed: failure })
}

fn diffeq<T: Scalar>(c: &Coeffs) -> Result<SymmetricDiffEq<T>, CliError> {
    SymmetricDiffEq::new(parse_list("a", &c.a)?, parse_list("b", &c.b)?).map_err(fail)
}

pub fn eq(ctx: &Context, cmd: EqCmd) -> Result<Outcome, CliError> {
    with_scalar!(ctx.kind(), T => match &cmd {
        EqCmd::Check(c) => {
            let e = diffeq::<T>(c)?;
            let ok = e.is_superperiodic();
            Ok(Outcome::check(format!("period: {}\nsuperperiodic: {ok}\n", e.period()), ok, "solutions are not antiperiodic"))
        }
        EqCmd::Monodromy(c) => {
            let e = diffeq::<T>(c)?;
            let m = e.monodromy();
            let ok = m.is_neg_identity();
            Ok(Outcome::check(format!("{}superperiodic: {ok}\n", matrix_text(&m)), ok, "monodromy is not -Id"))
        }
        EqCmd::Variety(c) => {
            let e = diffeq::<T>(c)?;
            let res = e.variety_residuals();
            let ok = res.iter().all(Scalar::is_negligible);
            Ok(Outcome::check(
                format!("residuals: {}\non variety: {ok}\n", list_text(&res)),
                ok,
                "residuals do not vanish",
            ))
        }
    })
}

pub fn sl(ctx: &Context, cmd: SlCmd) -> Result<Outcome, CliError> {
    let input = match &cmd {
        SlCmd::Black(i) | SlCmd::ToSymplectic(i) | SlCmd::Dual(i) | SlCmd::Gale(i) => i.clone(),
    };
    let text = read_input(&input)?;
    with_scalar!(ctx.kind_for(&text), T => match cmd {
        SlCmd::Black(_) => {
            let g = FriezeDocument::<T>::parse(&text)?.grid;
            Ok(Outcome::ok(sl_to_text(&black_of(&g))))
        }
        SlCmd::ToSymplectic(_) => {
            let f = sl_parse::<T>(&text)?;
            let g = symplectic_of(&f).map_err(|e| CliError::Verification(e.to_string()))?;
            Ok(Outcome::ok(render(ctx, FriezeDocument::new(g))))
        }
        SlCmd::Dual(_) => {
            let f = sl_parse::<T>(&text)?;
            f.check().map_err(|e| CliError::Verification(e.to_string()))?;
            Ok(Outcome::ok(sl_to_text(&f.projective_dual())))
        }
        SlCmd::Gale(_) => {
            let f = sl_parse::<T>(&text)?;
            f.check().map_err(|e| CliError::Verification(e.to_string()))?;
            Ok(Outcome::ok(sl_to_text(&f.gale_dual())))
        }
    })
}

fn seed_text(s: &Seed) -> String {
    let mut out = String::new();
    for (k, x) in s.cluster.iter().enumerate() {
        let _ = writeln!(out, "u{} = {x}", k + 1);
    }
    out.push_str("matrix:\n");
    let rows: Vec<String> = s
        .matrix
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| format!("{v:>3}")).collect::<Vec<_>>().join(""))
        .collect();
    for r in rows {
        let _ = writeln!(out, "{r}");
    }
    out
}

pub fn cluster(ctx: &Context, cmd: ClusterCmd) -> Result<Outcome, CliError> {
    match cmd {
        ClusterCmd::Belt { width, steps } => {
            let mut s = Seed::c2_square_aw(width);
            let mut out = String::from("step 0\n");
            out.push_str(&seed_text(&s));
            for k in 1..=steps {
                s = s.belt_step(BeltSign::Plus).and_then(|t| t.belt_step(BeltSign::Minus)).map_err(fail)?;
                let _ = writeln!(out, "step {k}");
                out.push_str(&seed_text(&s));
            }
            Ok(Outcome::ok(out))
        }
        ClusterCmd::Mutate { width, word } => {
            let s = Seed::c2_square_aw(width);
            let w = parse_word(&word, s.rank())?;
            let s = s.mutate_word(&w).map_err(fail)?;
            Ok(Outcome::ok(seed_text(&s)))
        }
        ClusterCmd::Formal { width } => {
            let g = formal_frieze(width).map_err(fail)?;
            let doc = FriezeDocument::new(g);
            Ok(Outcome::ok(match ctx.format {
                Format::Text => laurent_rows(&doc.grid),
                Format::Json => doc.to_json(),
            }))
        }
        ClusterCmd::Evaluate { width, point, word } => with_scalar!(ctx.kind(), T => {
            let s = Seed::c2_square_aw(width);
            let w = parse_word(&word, s.rank())?;
            let s = s.mutate_word(&w).map_err(fail)?;
            let p = parse_list::<T>("point", &point)?;
            let g = evaluate_frieze(&s, &p).map_err(fail)?;
            Ok(Outcome::ok(render(ctx, FriezeDocument::new(g))))
        }),
    }
}

/// One entry per line, since Laurent polynomials do not fit a grid.
fn laurent_rows<T: Scalar>(g: &FriezeGrid<T>) -> String {
    let mut out = format!("# width={} period={} scalar={}\n", g.width(), g.period(), T::KIND);
    for idx in g.domain() {
        let colour = if idx.is_black() { "black" } else { "white" };
        let _ = writeln!(out, "{idx} {colour}: {}", g.entry(idx));
    }
    out
}

fn to_c64(tok: &str) -> Option<Complex64> {
    ComplexFloat::parse_scalar(tok).or_else(|| {
        let z = Gaussian::parse_scalar(tok)?;
        Some(Complex64::new(z.re.to_f64()?, z.im.to_f64()?))
    })
}

/// Reads any polygon document as complex floats.
fn polygon_as_c64(text: &str) -> Result<Polygon<Complex64>, CliError> {
    let kind = kind_of(text).unwrap_or(ScalarKind::Rational);
    with_scalar!(kind, T => {
        let p = polygon_parse::<T>(text)?;
        let conv = |x: &T| to_c64(&x.canonical()).ok_or_else(|| CliError::Usage(format!("cannot read `{x}` as a float")));
        let a = conv(&p.form.a)?;
        let vertices = p
            .vertices
            .iter()
            .map(|v| -> Result<_, CliError> { Ok([conv(&v[0])?, conv(&v[1])?, conv(&v[2])?, conv(&v[3])?]) })
            .collect::<Result<Vec<_>, _>>()?;
        let form = SymplecticForm { a, variant: p.form.variant };
        Ok(Polygon::new(vertices, form, p.first))
    })
}

pub fn polygon(ctx: &Context, cmd: PolygonCmd) -> Result<Outcome, CliError> {
    match cmd {
        PolygonCmd::FromFrieze { input, anchor } => {
            let text = read_input(&input)?;
            with_scalar!(ctx.kind_for(&text), T => {
                let g = FriezeDocument::<T>::parse(&text)?.grid;
                Ok(Outcome::ok(polygon_to_text(&polygon_from_frieze(&g, anchor))))
            })
        }
        PolygonCmd::ToFrieze(i) => {
            let text = read_input(&i)?;
            with_scalar!(ctx.kind_for(&text), T => {
                let p = polygon_parse::<T>(&text)?;
                let g = frieze_from_polygon(&p).map_err(|e| CliError::Verification(e.to_string()))?;
                Ok(Outcome::ok(render(ctx, FriezeDocument::new(g))))
            })
        }
        PolygonCmd::Normalize(i) => {
            let text = read_input(&i)?;
            let raw = polygon_as_c64(&text)?;
            let p = normalize_lift(&raw.vertices, &raw.form).map_err(|e| CliError::Verification(e.to_string()))?;
            let p = Polygon::new(p.vertices, p.form, raw.first);
            let mut out = polygon_to_text(&p);
            let _ = writeln!(out, "# tolerance={}", float_tolerance());
            Ok(Outcome::ok(out))
        }
        PolygonCmd::Coeffs(i) => {
            let text = read_input(&i)?;
            with_scalar!(ctx.kind_for(&text), T => {
                let p = polygon_parse::<T>(&text)?;
                let (a, b) = coeffs_from_polygon(&p).map_err(|e| CliError::Verification(e.to_string()))?;
                Ok(Outcome::ok(format!("first: {}\na: {}\nb: {}\n", p.first, list_text(&a), list_text(&b))))
            })
        }
    }
}

pub fn search(ctx: &Context, cmd: SearchCmd) -> Result<Outcome, CliError> {
    match cmd {
        SearchCmd::Enumerate { width, bound, dedup, list } => {
            let dedup = match dedup {
                DedupArg::None => Dedup::None,
                DedupArg::Translation => Dedup::ByTranslation,
                DedupArg::Dihedral => Dedup::ByDihedral,
            };
            let found = enumerate(&SearchConfig::new(width, bound).with_dedup(dedup));
            let orbits = dihedral_orbits(&found).map_err(fail)?;
            let mut out = format!("width: {width}, bound: {bound}\ncount: {}, orbits: {}\n", found.len(), orbits.len());
            if list {
                for g in found {
                    out.push_str(&render(ctx, FriezeDocument::new(g)));
                }
            }
            Ok(Outcome::ok(out))
        }
        SearchCmd::Orbits { width, bound } => {
            let found = enumerate(&SearchConfig::new(width, bound));
            let orbits = dihedral_orbits(&found).map_err(fail)?;
            let mut out = format!("width: {width}, bound: {bound}\norbits: {}\n", orbits.len());
            for (k, o) in orbits.into_iter().enumerate() {
                let _ = writeln!(out, "# orbit {} size={}", k + 1, o.members.len());
                out.push_str(&render(ctx, FriezeDocument::new(o.representative)));
            }
            Ok(Outcome::ok(out))
        }
    }
}
