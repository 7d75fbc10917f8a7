use std::io::Read;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use k3lattice::clifford::{
    conjugation_preserves_lattice, find_polarization_element_with, gspin_generator,
    left_mul_matrix, phi_a, PolarizationSearch, Projector,
};
use k3lattice::embeddings::{embed_ld_in_l, four_squares, v_d_in_k3};
use k3lattice::enumeration::enumerate_lattices;
use k3lattice::lattice::{
    big_l, check_disc_complement, discriminant_group, e8, hyperbolic_u, in_discriminant_kernel,
    k3_lattice, l_d, orthogonal_complement, rank_one, saturate,
};
use k3lattice::roots::{
    in_cn, min_polarization_degree, minus_two_walls_through, short_vectors, verify_certificate,
};
use k3lattice::{Lattice, Parallelism};

use crate::args::{Cli, CliffordCmd, Command, EmbedCmd, Host, LatticeCmd};
use crate::codec::{self, parse_vector_arg, Encoder};
use crate::{CliError, Output};

struct Ctx<'a> {
    enc: Encoder,
    mode: Parallelism,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    /// A path, inline JSON, or stdin for `None` / `-`.
    fn load(&mut self, src: Option<&str>) -> Result<Value, CliError> {
        let text = match src {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
                s
            }
            Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("reading {path}: {e}")))?,
        };
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))
    }

    fn lattice(&mut self, src: Option<&str>) -> Result<Lattice, CliError> {
        codec::lattice(&self.load(src)?)
    }

    fn host(&mut self, h: &Host) -> Result<Arc<Lattice>, CliError> {
        Ok(Arc::new(self.lattice(h.host.as_deref())?))
    }
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    BigInt::from_str(s.trim()).map_err(|_| CliError::Input(format!("not an integer: {s}")))
}

fn configure_threads(jobs: usize) -> Parallelism {
    if jobs <= 1 {
        return Parallelism::Sequential;
    }
    #[cfg(feature = "parallel")]
    {
        // a second call fails harmlessly once the pool exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    Parallelism::Parallel
}

pub fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    if cli.jobs == 0 {
        return Err(CliError::Input("--jobs must be at least 1".into()));
    }
    let mut ctx = Ctx {
        enc: Encoder {
            raw_ints: cli.raw_ints,
        },
        mode: configure_threads(cli.jobs),
        stdin,
    };
    let enc = ctx.enc;
    let v = match &cli.command {
        Command::Lattice(LatticeCmd::Build { name, d, n }) => {
            enc.lattice(&build(&mut ctx, name, *d, n.as_deref())?)
        }
        Command::Lattice(LatticeCmd::Info(input)) => {
            info(&enc, &ctx.lattice(input.input.as_deref())?)?
        }
        Command::Embed(EmbedCmd::FourSquares { m }) => {
            let w = four_squares(*m);
            json!({"m": w.m, "parts": w.parts})
        }
        Command::Embed(EmbedCmd::LdInL { d }) => enc.embedding(&embed_ld_in_l(*d)?),
        Command::Embed(EmbedCmd::Vd { d }) => {
            let data = v_d_in_k3(*d)?;
            json!({
                "d": d,
                "vector": enc.vector(&data.vector),
                "norm": enc.int(&k3_lattice().norm(&data.vector)),
                "complement": enc.embedding(&data.complement),
                "isometry": enc.embedding(&data.isometry),
            })
        }
        Command::Complement(input) => {
            let e = codec::embedding(&ctx.load(input.input.as_deref())?)?;
            enc.embedding(&orthogonal_complement(&e)?)
        }
        Command::Saturate(input) => {
            let e = codec::embedding(&ctx.load(input.input.as_deref())?)?;
            enc.embedding(&saturate(&e)?)
        }
        Command::Roots { norm, input } => {
            let l = ctx.lattice(input.input.as_deref())?;
            let r = short_vectors(&l, &parse_int(norm)?, ctx.mode)?;
            json!({
                "norm": enc.int(&r.norm),
                "count": r.vectors.len(),
                "complete": r.complete,
                "vectors": enc.vectors(&r.vectors),
            })
        }
        Command::Walls { v, input } => {
            let l = ctx.lattice(input.input.as_deref())?;
            let v = parse_vector_arg(v)?;
            let walls = minus_two_walls_through(&l, &v)?;
            json!({
                "v": enc.vector(&v),
                "norm": enc.int(&l.norm(&v)),
                "walls": enc.vectors(&walls),
                "in_cn": in_cn(&l, &v)?,
            })
        }
        Command::Mindeg {
            norm_limit,
            coeff_box,
            input,
        } => {
            let l = ctx.lattice(input.input.as_deref())?;
            let r = min_polarization_degree(&l, *norm_limit, *coeff_box, ctx.mode)?;
            json!({
                "upper_bound": r.upper_bound.as_ref().map(|x| enc.int(x)),
                "certificate": r.certificate.as_ref().map(|c| enc.vector(c)),
                "exhaustive": r.exhaustive,
                "searched_norm_limit": r.searched_norm_limit,
                "searched_box": r.searched_box,
            })
        }
        Command::VerifyCert { v, degree, input } => {
            let l = ctx.lattice(input.input.as_deref())?;
            let v = parse_vector_arg(v)?;
            json!({"valid": verify_certificate(&l, &v, &parse_int(degree)?)})
        }
        Command::DiscKernel {
            isometry_file,
            input,
        } => {
            let doc = ctx.load(Some(isometry_file))?;
            let fallback = if doc.get("lattice").is_none() {
                Some(ctx.lattice(input.input.as_deref())?)
            } else {
                None
            };
            let g = codec::isometry(&doc, fallback)?;
            json!({"in_kernel": in_discriminant_kernel(&g)?})
        }
        Command::Clifford(c) => clifford(&mut ctx, c)?,
        Command::Enumerate {
            rank,
            max_disc,
            even,
            csv,
        } => {
            let list = enumerate_lattices(*rank, *max_disc, *even, ctx.mode)?;
            if *csv {
                return Ok(Output::Text(list.to_csv()));
            }
            let forms: Vec<Value> = list
                .forms
                .iter()
                .map(|g| json!({"rank": list.rank, "gram": enc.matrix(g)}))
                .collect();
            json!({
                "rank": list.rank,
                "max_disc": list.max_disc,
                "even_only": list.even_only,
                "count": forms.len(),
                "forms": forms,
            })
        }
        Command::CheckDiscComplement { n, nprime } => {
            let a = codec::embedding(&ctx.load(Some(n))?)?;
            let b = codec::embedding(&ctx.load(Some(nprime))?)?;
            let r = check_disc_complement(&a, &b)?;
            json!({
                "disc_n": enc.int(&r.disc_n),
                "disc_nprime": enc.int(&r.disc_nprime),
                "index": enc.int(&r.index),
                "equal": r.disc_n == r.disc_nprime && r.disc_n == r.index,
            })
        }
    };
    Ok(Output::Json(v))
}

fn require_d(d: Option<i64>) -> Result<i64, CliError> {
    d.ok_or_else(|| CliError::Input("l_d needs --d".into()))
}

fn build(ctx: &mut Ctx, name: &str, d: Option<i64>, n: Option<&str>) -> Result<Lattice, CliError> {
    let key = name.to_ascii_lowercase().replace('_', "-");
    Ok(match key.as_str() {
        "k3" => k3_lattice(),
        "l-d" | "ld" => l_d(require_d(d)?)?,
        "big-l" | "l" => big_l(),
        "e8" => e8(),
        "u" => hyperbolic_u(),
        "rank-one" => {
            let n = n.ok_or_else(|| CliError::Input("rank-one needs --n".into()))?;
            rank_one(parse_int(n)?)
        }
        _ if name == "-" || Path::new(name).is_file() || name.trim_start().starts_with('{') => {
            ctx.lattice(Some(name))?
        }
        _ => {
            return Err(CliError::Input(format!(
                "unknown lattice \"{name}\" (expected k3, l_d, big-l, e8, u, rank-one or a file)"
            )))
        }
    })
}

fn info(enc: &Encoder, l: &Lattice) -> Result<Value, CliError> {
    let s = l.signature();
    let det = l.det();
    let group = if det.is_zero() {
        Value::Null
    } else {
        let factors: Vec<BigInt> = discriminant_group(l)?
            .invariant_factors
            .into_iter()
            .filter(|f| !f.abs().is_one())
            .collect();
        enc.vector(&factors)
    };
    Ok(json!({
        "rank": l.rank(),
        "signature": [s.positive, s.negative, s.zero],
        "disc": enc.int(&det.abs()),
        "disc_group": group,
    }))
}

fn clifford(ctx: &mut Ctx, c: &CliffordCmd) -> Result<Value, CliError> {
    let enc = ctx.enc;
    Ok(match c {
        CliffordCmd::Mul { host, x, y } => {
            let h = ctx.host(host)?;
            let x = codec::element(&ctx.load(Some(x))?, &h)?;
            let y = codec::element(&ctx.load(Some(y))?, &h)?;
            enc.element(&x.mul(&y)?)
        }
        CliffordCmd::Reversal { host, x } => {
            let h = ctx.host(host)?;
            enc.element(&codec::element(&ctx.load(Some(x))?, &h)?.reversal())
        }
        CliffordCmd::PhiA { host, x, y, a } => {
            let h = ctx.host(host)?;
            let x = codec::element(&ctx.load(Some(x))?, &h)?;
            let y = codec::element(&ctx.load(Some(y))?, &h)?;
            let a = codec::element(&ctx.load(Some(a))?, &h)?;
            json!({"value": enc.int(&phi_a(&x, &y, &a)?)})
        }
        CliffordCmd::FindA {
            host,
            max_support,
            coeff_bound,
        } => {
            let h = ctx.host(host)?;
            let bounds = PolarizationSearch {
                max_support: *max_support,
                coeff_bound: *coeff_bound,
            };
            enc.element(&find_polarization_element_with(&h, bounds, ctx.mode)?)
        }
        CliffordCmd::Gspin { host, v, w } => {
            let h = ctx.host(host)?;
            let gs = gspin_generator(&parse_vector_arg(v)?, &parse_vector_arg(w)?, &h)?;
            let check = conjugation_preserves_lattice(&gs)?;
            let offending = check.offending.as_ref().map(|(i, img)| {
                json!({
                    "index": i,
                    "image": img.iter().map(|q| enc.rational(q)).collect::<Vec<_>>(),
                })
            });
            json!({
                "g": enc.element(&gs.g),
                "g_inv_numerator": enc.element(&gs.g_inv_numerator),
                "g_inv_denominator": enc.int(&gs.g_inv_denominator),
                "preserves_lattice": check.preserves,
                "offending": offending,
            })
        }
        CliffordCmd::Project { host, x, endo_file } => {
            let h = ctx.host(host)?;
            let f = match (x, endo_file) {
                (Some(x), _) => left_mul_matrix(&codec::element(&ctx.load(Some(x))?, &h)?)?,
                (None, Some(file)) => codec::endo(&ctx.load(Some(file))?)?,
                (None, None) => {
                    return Err(CliError::Input("project needs --x or --endo-file".into()))
                }
            };
            json!({"vector": enc.vector(&Projector::new(&h)?.project(&f)?)})
        }
    })
}
