//! JSON file formats for codes, generator matrices and graphs.
//!
//! Three self-describing schemas, each tagged by a `format` string:
//! `pairsym-code/1`, `pairsym-gen/1` and `pairsym-graph/1`. Writers emit a
//! canonical form (lexicographically sorted codewords and edges, pretty
//! printing, trailing newline), so re-reading and re-writing any file
//! reproduces it byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol};
use crate::classical::GeneratorMatrix;
use crate::code::Code;
use crate::error::{Error, Result};
use crate::graphs::Graph;

const CODE_FORMAT: &str = "pairsym-code/1";
const GEN_FORMAT: &str = "pairsym-gen/1";
const GRAPH_FORMAT: &str = "pairsym-graph/1";

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum AlphabetRepr {
    Ring { q: u16 },
    Field { p: u16, m: u32, modulus: Vec<u16> },
}

impl AlphabetRepr {
    fn of(alphabet: &Alphabet) -> Self {
        match alphabet.field_parts() {
            Some((p, m, modulus)) => AlphabetRepr::Field {
                p,
                m,
                modulus: modulus.to_vec(),
            },
            None => AlphabetRepr::Ring {
                q: alphabet.order(),
            },
        }
    }

    fn build(self) -> Result<Alphabet> {
        match self {
            AlphabetRepr::Ring { q } => Alphabet::ring(q),
            AlphabetRepr::Field { p, m, modulus } => Alphabet::field_with_modulus(p, m, modulus),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeFile {
    format: String,
    alphabet: AlphabetRepr,
    n: usize,
    claimed_d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
    codewords: Vec<Vec<Symbol>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenFile {
    format: String,
    alphabet: AlphabetRepr,
    k: usize,
    n: usize,
    rows: Vec<Vec<Symbol>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    format: String,
    order: usize,
    edges: Vec<(usize, usize)>,
}

fn render<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::MalformedFile(format!(
            "format is {found:?}, expected {expected:?}"
        )));
    }
    Ok(())
}

/// Serialize a code to the `pairsym-code/1` schema. Codewords are already
/// held sorted, so output is canonical.
pub fn code_to_string(code: &Code) -> Result<String> {
    render(&CodeFile {
        format: CODE_FORMAT.into(),
        alphabet: AlphabetRepr::of(code.alphabet()),
        n: code.n(),
        claimed_d: code.claimed_d(),
        provenance: code.provenance().map(str::to_owned),
        codewords: code.words().to_vec(),
    })
}

pub fn code_from_str(text: &str) -> Result<Code> {
    let file: CodeFile = serde_json::from_str(text)?;
    check_format(&file.format, CODE_FORMAT)?;
    let mut code = Code::new(
        file.alphabet.build()?,
        file.n,
        file.codewords,
        file.claimed_d,
    )?;
    if let Some(p) = file.provenance {
        code.set_provenance(p);
    }
    Ok(code)
}

pub fn write_code(path: impl AsRef<Path>, code: &Code) -> Result<()> {
    Ok(fs::write(path, code_to_string(code)?)?)
}

pub fn read_code(path: impl AsRef<Path>) -> Result<Code> {
    code_from_str(&fs::read_to_string(path)?)
}

/// Serialize a generator matrix to the `pairsym-gen/1` schema.
pub fn gen_to_string(gm: &GeneratorMatrix) -> Result<String> {
    render(&GenFile {
        format: GEN_FORMAT.into(),
        alphabet: AlphabetRepr::of(gm.alphabet()),
        k: gm.k(),
        n: gm.n(),
        rows: gm.rows().to_vec(),
    })
}

pub fn gen_from_str(text: &str) -> Result<GeneratorMatrix> {
    let file: GenFile = serde_json::from_str(text)?;
    check_format(&file.format, GEN_FORMAT)?;
    let gm = GeneratorMatrix::new(file.alphabet.build()?, file.rows)?;
    if gm.k() != file.k || gm.n() != file.n {
        return Err(Error::MalformedFile(format!(
            "declared dimensions {}x{} do not match the rows ({}x{})",
            file.k,
            file.n,
            gm.k(),
            gm.n()
        )));
    }
    Ok(gm)
}

pub fn write_gen(path: impl AsRef<Path>, gm: &GeneratorMatrix) -> Result<()> {
    Ok(fs::write(path, gen_to_string(gm)?)?)
}

pub fn read_gen(path: impl AsRef<Path>) -> Result<GeneratorMatrix> {
    gen_from_str(&fs::read_to_string(path)?)
}

/// Serialize a graph to the `pairsym-graph/1` schema: endpoints ordered
/// within each edge, edges sorted.
pub fn graph_to_string(graph: &Graph) -> Result<String> {
    render(&GraphFile {
        format: GRAPH_FORMAT.into(),
        order: graph.order(),
        edges: graph.edges().collect(),
    })
}

pub fn graph_from_str(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)?;
    check_format(&file.format, GRAPH_FORMAT)?;
    for &(u, v) in &file.edges {
        if u >= v {
            return Err(Error::MalformedFile(format!(
                "edge [{u}, {v}] violates the u < v convention"
            )));
        }
    }
    Graph::new(file.order, file.edges)
}

pub fn write_graph(path: impl AsRef<Path>, graph: &Graph) -> Result<()> {
    Ok(fs::write(path, graph_to_string(graph)?)?)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    graph_from_str(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::reed_solomon;
    use crate::constructions::construct;

    #[test]
    fn code_round_trip_is_bit_identical() {
        let mut code = construct(6, 5, 3).unwrap().code;
        code.set_provenance("tabulated(n=6, d=5, q=3)".to_string());
        let text = code_to_string(&code).unwrap();
        let back = code_from_str(&text).unwrap();
        assert_eq!(code_to_string(&back).unwrap(), text);
        assert_eq!(back.words(), code.words());
        assert_eq!(back.claimed_d(), code.claimed_d());
        assert_eq!(back.provenance(), code.provenance());
    }

    #[test]
    fn field_alphabet_survives_round_trip() {
        let alphabet = Alphabet::field(2, 2).unwrap();
        let code = reed_solomon(&alphabet, 4, 2).unwrap().span().unwrap();
        let text = code_to_string(&code).unwrap();
        let back = code_from_str(&text).unwrap();
        assert_eq!(back.alphabet(), code.alphabet());
        assert!(text.contains("\"modulus\""));
    }

    #[test]
    fn gen_round_trip_is_bit_identical() {
        let gm = reed_solomon(&Alphabet::field(5, 1).unwrap(), 5, 3).unwrap();
        let text = gen_to_string(&gm).unwrap();
        let back = gen_from_str(&text).unwrap();
        assert_eq!(gen_to_string(&back).unwrap(), text);
        assert_eq!(back.rows(), gm.rows());
    }

    #[test]
    fn graph_round_trip_is_bit_identical() {
        let graph = Graph::complete(5).unwrap();
        let text = graph_to_string(&graph).unwrap();
        let back = graph_from_str(&text).unwrap();
        assert_eq!(graph_to_string(&back).unwrap(), text);
        assert_eq!(back.size(), 10);
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(matches!(
            code_from_str("{\"format\":\"pairsym-code/2\",\"alphabet\":{\"kind\":\"ring\",\"q\":2},\"n\":2,\"claimed_d\":null,\"codewords\":[[0,0]]}"),
            Err(Error::MalformedFile(_))
        ));
        assert!(matches!(code_from_str("not json"), Err(Error::Json(_))));
        assert!(matches!(
            graph_from_str("{\"format\":\"pairsym-graph/1\",\"order\":3,\"edges\":[[1,0]]}"),
            Err(Error::MalformedFile(_))
        ));
        // Unknown fields are refused rather than silently dropped.
        assert!(code_from_str("{\"format\":\"pairsym-code/1\",\"alphabet\":{\"kind\":\"ring\",\"q\":2},\"n\":2,\"claimed_d\":null,\"codewords\":[[0,0]],\"extra\":1}").is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join("pairsym-format-tests");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("code.json");
        let code = construct(4, 2, 2).unwrap().code;
        write_code(&path, &code).unwrap();
        let back = read_code(&path).unwrap();
        assert_eq!(back.words(), code.words());
        fs::remove_file(&path).unwrap();
    }
}
