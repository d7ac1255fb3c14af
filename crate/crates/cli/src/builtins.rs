//! Named builtin geometries, so the suite and the CLI need no data files.
//!
//! Grammar: `fano`, `pg:<dim>:<q>`, `example2:<n>`, and the polar kinds
//! `sp|o-par|o-plus|o-minus` as `<kind>:<rank>:<q>`.

use anyhow::{anyhow, bail, Context, Result};

use geom_core::gallery;
use geom_core::polar::{build_polar, PolarGeometry, PolarKind};
use geom_core::Geometry;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Fano,
    Pg { dim: usize, q: usize },
    Example2 { n: usize },
    Polar { kind: PolarKind, n: usize, q: usize },
}

pub fn parse(name: &str) -> Result<Builtin> {
    let parts: Vec<&str> = name.split(':').collect();
    let number = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .with_context(|| format!("invalid number `{s}` in builtin `{name}`"))
    };
    match parts.as_slice() {
        ["fano"] => Ok(Builtin::Fano),
        ["pg", d, q] => Ok(Builtin::Pg {
            dim: number(d)?,
            q: number(q)?,
        }),
        ["example2", n] => Ok(Builtin::Example2 { n: number(n)? }),
        [kind, n, q] => {
            let kind = parse_polar_kind(kind)?;
            Ok(Builtin::Polar {
                kind,
                n: number(n)?,
                q: number(q)?,
            })
        }
        _ => bail!(
            "unknown builtin `{name}`; expected fano, pg:<dim>:<q>, example2:<n>, \
             or sp|o-par|o-plus|o-minus:<rank>:<q>"
        ),
    }
}

pub fn parse_polar_kind(kind: &str) -> Result<PolarKind> {
    match kind {
        "sp" => Ok(PolarKind::Symplectic),
        "o-par" => Ok(PolarKind::ParabolicQuadric),
        "o-plus" => Ok(PolarKind::HyperbolicQuadric),
        "o-minus" => Ok(PolarKind::EllipticQuadric),
        #[cfg(feature = "hermitian")]
        "herm" => Ok(PolarKind::Hermitian),
        #[cfg(not(feature = "hermitian"))]
        "herm" => bail!("hermitian support is behind the `hermitian` feature"),
        other => bail!("unknown polar kind `{other}`"),
    }
}

pub fn geometry(name: &str) -> Result<Geometry> {
    match parse(name)? {
        Builtin::Fano => Ok(gallery::fano()),
        Builtin::Pg { dim, q } => gallery::projective_space(dim, q).map_err(|e| anyhow!(e)),
        Builtin::Example2 { n } => gallery::example2(n).map_err(|e| anyhow!(e)),
        Builtin::Polar { kind, n, q } => {
            Ok(build_polar(kind, n, q).map_err(|e| anyhow!(e))?.geometry().clone())
        }
    }
}

pub fn polar(name: &str) -> Result<PolarGeometry> {
    match parse(name)? {
        Builtin::Polar { kind, n, q } => build_polar(kind, n, q).map_err(|e| anyhow!(e)),
        _ => bail!("builtin `{name}` is not a polar geometry"),
    }
}
