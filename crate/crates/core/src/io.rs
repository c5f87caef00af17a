//! JSON file formats for algebras, pairs and ansatz spaces.
//!
//! Algebra: `{"name", "kind", "dim" | "n", "basis", "table": [[i, j, k, "p/q"], ...]}`.
//! Pair: `{"M", "L", "S": {"entries": [[...]]}, "T": {"entries": [[...]]}}` where
//! `M` and `L` are inline algebras, built-in names (`sl2`, `gl3`, ...) or paths
//! to algebra files relative to the referring file.
//! Ansatz: `{"M", "L", "basis": [{"entries": ...}, ...], "exclude_trivial": bool}`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraDescriptor, Kind, StructureConstant};
use crate::construct::algebras;
use crate::construct::AnsatzSpace;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::pairs::{make_triple, LinearMap, MapTriple};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<(usize, usize, usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Named(String),
    Inline(AlgebraFile),
}

impl<'de> Deserialize<'de> for AlgebraRef {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> serde::de::Visitor<'de> for V {
            type Value = AlgebraRef;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an algebra name, a path, or an inline algebra object")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<AlgebraRef, E> {
                Ok(AlgebraRef::Named(v.to_string()))
            }

            fn visit_map<A: serde::de::MapAccess<'de>>(self, map: A) -> std::result::Result<AlgebraRef, A::Error> {
                AlgebraFile::deserialize(serde::de::value::MapAccessDeserializer::new(map)).map(AlgebraRef::Inline)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub entries: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    #[serde(rename = "M")]
    pub m: AlgebraRef,
    #[serde(rename = "L")]
    pub l: AlgebraRef,
    #[serde(rename = "S")]
    pub s: MatrixFile,
    #[serde(rename = "T")]
    pub t: MatrixFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnsatzFile {
    #[serde(rename = "M")]
    pub m: AlgebraRef,
    #[serde(rename = "L")]
    pub l: AlgebraRef,
    pub basis: Vec<MatrixFile>,
    #[serde(default)]
    pub exclude_trivial: bool,
}

fn format_error(path: &Path, field: &str, message: impl ToString) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        field: field.to_string(),
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses JSON, reporting the path of the offending field.
pub fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let field = if field == "." { "(root)".to_string() } else { field };
        format_error(path, &field, e.into_inner())
    })
}

impl AlgebraFile {
    pub fn to_descriptor(&self) -> std::result::Result<AlgebraDescriptor, (String, String)> {
        if self.kind == Kind::Gl {
            let n = self
                .n
                .ok_or_else(|| ("n".to_string(), "kind \"gl\" needs \"n\"".to_string()))?;
            if !self.table.is_empty() {
                return Err(("table".into(), "kind \"gl\" takes no table".into()));
            }
            let mut d = AlgebraDescriptor::gl(n);
            d.name = self.name.clone();
            if let Some(basis) = &self.basis {
                d.basis = basis.clone();
            }
            return Ok(d);
        }
        if self.n.is_some() {
            return Err(("n".into(), "\"n\" is only used with kind \"gl\"".into()));
        }
        let dim = match (self.dim, &self.basis) {
            (Some(d), _) => d,
            (None, Some(b)) => b.len(),
            (None, None) => return Err(("dim".into(), "missing \"dim\" (or \"basis\")".into())),
        };
        Ok(AlgebraDescriptor {
            name: self.name.clone(),
            kind: self.kind,
            dim,
            basis: self.basis.clone().unwrap_or_else(|| AlgebraDescriptor::default_basis(dim)),
            table: self
                .table
                .iter()
                .map(|(i, j, k, c)| StructureConstant::new(*i, *j, *k, c.clone()))
                .collect(),
        })
    }

    pub fn from_descriptor(d: &AlgebraDescriptor) -> AlgebraFile {
        if d.kind == Kind::Gl {
            return AlgebraFile {
                name: d.name.clone(),
                kind: Kind::Gl,
                dim: None,
                n: d.gl_size(),
                basis: None,
                table: Vec::new(),
            };
        }
        AlgebraFile {
            name: d.name.clone(),
            kind: d.kind,
            dim: Some(d.dim),
            n: None,
            basis: Some(d.basis.clone()),
            table: d.table.iter().map(|c| (c.i, c.j, c.k, c.coeff.clone())).collect(),
        }
    }
}

fn build(path: &Path, field: &str, file: &AlgebraFile) -> Result<Algebra> {
    let d = file
        .to_descriptor()
        .map_err(|(f, msg)| format_error(path, &format!("{field}.{f}"), msg))?;
    Algebra::build(d).map_err(|e| format_error(path, field, e))
}

/// Loads an algebra file.
pub fn load_algebra(path: &Path) -> Result<Algebra> {
    let file: AlgebraFile = parse_json(path, &read(path)?)?;
    build(path, "(root)", &file)
}

/// Resolves a reference: inline, built-in name, or file relative to `base`.
fn resolve(path: &Path, field: &str, r: &AlgebraRef) -> Result<Arc<Algebra>> {
    match r {
        AlgebraRef::Inline(file) => Ok(Arc::new(build(path, field, file)?)),
        AlgebraRef::Named(name) => {
            if let Some(d) = algebras::by_name(name) {
                return Algebra::build(d).map(Arc::new).map_err(|e| format_error(path, field, e));
            }
            let target: PathBuf = path.parent().unwrap_or(Path::new(".")).join(name);
            if target.is_file() {
                return load_algebra(&target).map(Arc::new);
            }
            Err(format_error(
                path,
                field,
                format!("{name:?} is neither a built-in algebra nor an algebra file"),
            ))
        }
    }
}

fn map_from(path: &Path, field: &str, m: &Arc<Algebra>, l: &Arc<Algebra>, file: &MatrixFile) -> Result<LinearMap> {
    let matrix = Matrix::from_rows(file.entries.clone()).map_err(|e| format_error(path, field, e))?;
    LinearMap::new(m.clone(), l.clone(), matrix).map_err(|e| format_error(path, field, e))
}

fn algebras_of(path: &Path, m: &AlgebraRef, l: &AlgebraRef) -> Result<(Arc<Algebra>, Arc<Algebra>)> {
    let ma = resolve(path, "M", m)?;
    let la = if m == l { ma.clone() } else { resolve(path, "L", l)? };
    if !la.kind().is_lie() {
        return Err(format_error(path, "L", format!("target must be a Lie algebra, {:?} is {}", la.name(), la.kind())));
    }
    Ok((ma, la))
}

pub fn pair_from_file(path: &Path, file: &PairFile) -> Result<MapTriple> {
    let (m, l) = algebras_of(path, &file.m, &file.l)?;
    let s = map_from(path, "S.entries", &m, &l, &file.s)?;
    let t = map_from(path, "T.entries", &m, &l, &file.t)?;
    make_triple(s, t).map_err(|e| format_error(path, "(root)", e))
}

/// Loads a pair file as the triple `(S, T, -S-T)`.
pub fn load_pair(path: &Path) -> Result<MapTriple> {
    let file: PairFile = parse_json(path, &read(path)?)?;
    pair_from_file(path, &file)
}

pub fn load_ansatz(path: &Path) -> Result<AnsatzSpace> {
    let file: AnsatzFile = parse_json(path, &read(path)?)?;
    let (m, l) = algebras_of(path, &file.m, &file.l)?;
    let basis = file
        .basis
        .iter()
        .enumerate()
        .map(|(i, b)| map_from(path, &format!("basis[{i}].entries"), &m, &l, b))
        .collect::<Result<Vec<_>>>()?;
    let mut space = AnsatzSpace::new(basis).map_err(|e| format_error(path, "basis", e))?;
    space.exclude_trivial = file.exclude_trivial;
    Ok(space)
}

fn matrix_file(m: &Matrix) -> MatrixFile {
    MatrixFile { entries: m.to_rows() }
}

fn algebra_ref(a: &Algebra) -> AlgebraRef {
    AlgebraRef::Inline(AlgebraFile::from_descriptor(a.descriptor()))
}

pub fn pair_to_file(t: &MapTriple) -> PairFile {
    PairFile {
        m: algebra_ref(t.source()),
        l: algebra_ref(t.target()),
        s: matrix_file(t.s().matrix()),
        t: matrix_file(t.t().matrix()),
    }
}

pub fn ansatz_to_file(space: &AnsatzSpace) -> AnsatzFile {
    AnsatzFile {
        m: algebra_ref(space.source()),
        l: algebra_ref(space.target()),
        basis: space.basis().iter().map(|b| matrix_file(b.matrix())).collect(),
        exclude_trivial: space.exclude_trivial,
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::fixture;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn tmp(name: &str, text: &str) -> PathBuf {
        static N: AtomicUsize = AtomicUsize::new(0);
        let dir = std::env::temp_dir().join(format!("moufang-io-{}-{}", std::process::id(), N.fetch_add(1, Ordering::Relaxed)));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    #[test]
    fn algebra_round_trip() {
        for name in ["sl2", "octonions", "gl2", "nonlie3"] {
            let d = algebras::by_name(name).unwrap();
            let p = tmp("a.json", &to_json(&AlgebraFile::from_descriptor(&d)));
            let a = load_algebra(&p).unwrap();
            assert_eq!(a, Algebra::build(d).unwrap(), "{name}");
        }
    }

    #[test]
    fn algebra_file_literal() {
        let text = r#"{"name": "sl2", "kind": "lie", "basis": ["e","f","h"],
            "table": [[0,1,2,"1"], [0,2,0,"-2"], [1,2,1,"2"]]}"#;
        let a = load_algebra(&tmp("sl2.json", text)).unwrap();
        assert_eq!(a, Algebra::build(algebras::sl2()).unwrap());
    }

    #[test]
    fn unknown_keys_and_bad_rationals_name_the_field() {
        let p = tmp("x.json", r#"{"name": "a", "kind": "lie", "dim": 1, "colour": 3}"#);
        match load_algebra(&p).unwrap_err() {
            Error::Format { message, .. } => assert!(message.contains("colour"), "{message}"),
            e => panic!("{e}"),
        }
        let p = tmp("x.json", r#"{"name": "a", "kind": "lie", "dim": 2, "table": [[0,1,1,"1/0"]]}"#);
        match load_algebra(&p).unwrap_err() {
            Error::Format { field, .. } => assert_eq!(field, "table[0][3]"),
            e => panic!("{e}"),
        }
        let p = tmp("x.json", r#"{"name": "a", "kind": "gl"}"#);
        assert!(matches!(load_algebra(&p).unwrap_err(), Error::Format { field, .. } if field == "(root).n"));
        let p = tmp("x.json", r#"{"name": "a", "kind": "lie", "dim": 3, "table": [[0,1,2,"1"],[0,2,1,"1"],[1,2,0,"1"],[0,1,0,"1"]]}"#);
        assert!(matches!(load_algebra(&p).unwrap_err(), Error::Format { .. }));
        assert!(matches!(load_algebra(Path::new("/nonexistent/a.json")).unwrap_err(), Error::Io { .. }));
    }

    #[test]
    fn pair_round_trip() {
        for name in ["sl2-identity", "octonions-lr", "zero-zero1-gl1"] {
            let t = fixture(name).unwrap();
            let p = tmp("p.json", &to_json(&pair_to_file(&t)));
            assert_eq!(load_pair(&p).unwrap(), t, "{name}");
        }
    }

    #[test]
    fn pair_with_named_algebras() {
        let text = r#"{"M": "sl2", "L": "sl2",
            "S": {"entries": [["1","0","0"],["0","1","0"],["0","0","1"]]},
            "T": {"entries": [["0","0","0"],["0","0","0"],["0","0","0"]]}}"#;
        assert_eq!(load_pair(&tmp("p.json", text)).unwrap(), fixture("sl2-identity").unwrap());
        let bad = text.replacen(r#"["0","0","1"]]}"#, r#"["0","0"]]}"#, 1);
        match load_pair(&tmp("p.json", &bad)).unwrap_err() {
            Error::Format { field, .. } => assert_eq!(field, "S.entries"),
            e => panic!("{e}"),
        }
        let bad = text.replace(r#""L": "sl2""#, r#""L": "nope""#);
        assert!(matches!(load_pair(&tmp("p.json", &bad)).unwrap_err(), Error::Format { field, .. } if field == "L"));
        let bad = text.replace(r#""L": "sl2""#, r#""L": {"name": "x", "kind": "lie", "dim": "3"}"#);
        assert!(matches!(load_pair(&tmp("p.json", &bad)).unwrap_err(), Error::Format { field, .. } if field == "L.dim"));
        let bad = text.replace(r#""L": "sl2""#, r#""L": "nonlie3""#);
        assert!(load_pair(&tmp("p.json", &bad)).is_err());
    }

    #[test]
    fn algebra_path_reference() {
        let a = tmp("sl2.json", &to_json(&AlgebraFile::from_descriptor(&algebras::sl2())));
        let pair = a.with_file_name("pair.json");
        let mut file = pair_to_file(&fixture("sl2-identity").unwrap());
        file.m = AlgebraRef::Named("sl2.json".into());
        file.l = AlgebraRef::Named("sl2.json".into());
        fs::write(&pair, to_json(&file)).unwrap();
        assert_eq!(load_pair(&pair).unwrap(), fixture("sl2-identity").unwrap());
    }

    #[test]
    fn ansatz_round_trip() {
        let l = Arc::new(Algebra::build(algebras::sl2()).unwrap());
        let mut space = AnsatzSpace::scalar(l);
        space.exclude_trivial = true;
        let p = tmp("z.json", &to_json(&ansatz_to_file(&space)));
        let back = load_ansatz(&p).unwrap();
        assert!(back.exclude_trivial);
        assert_eq!(back.basis(), space.basis());
        let p = tmp("z.json", r#"{"M": "sl2", "L": "sl2", "basis": []}"#);
        assert!(matches!(load_ansatz(&p).unwrap_err(), Error::Format { field, .. } if field == "basis"));
    }
}
