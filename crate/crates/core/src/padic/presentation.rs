//! Finite presentations of the uniformizing groups `G` (HNN shape) and of
//! the index-2 overgroup for an extra automorphism.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::catalog::{CatalogEntry, TriangleFamily};
use super::PadicError;
use crate::graph::{catalog as graphs, GraphOfGroups, GroupLabel};
use crate::group::{build_group, ElementId, FiniteGroup, GroupSpec};

/// Word in the generators as `(generator index, exponent)` syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn letter(g: usize) -> Word {
        Word(vec![(g, 1)])
    }

    pub fn power_of(g: usize, e: i64) -> Word {
        Word(vec![(g, e)])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &(g, e) in &other.0 {
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn power(&self, k: u64) -> Word {
        (0..k).fold(Word::default(), |acc, _| acc.concat(self))
    }

    /// `x y x⁻¹ y⁻¹`
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    pub fn eval(&self, group: &FiniteGroup, images: &[ElementId]) -> ElementId {
        self.0.iter().fold(group.identity(), |acc, &(g, e)| group.mul(acc, group.pow(images[g], e)))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{e}", names[g]) })
            .collect();
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// `⟨Δ, γ; γα₁γ⁻¹ = α₂⟩`, the uniformizing group of the base curve.
    Hnn,
    /// Index-2 overgroup realizing an extra involution (dihedral case only).
    AutExtension,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Hnn => "hnn",
            Shape::AutExtension => "aut_extension",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub name: String,
    pub word: Word,
}

/// A finite vertex group listed element by element as words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexGroup {
    pub name: String,
    pub label: GroupLabel,
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub entry: CatalogEntry,
    pub shape: Shape,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
    pub vertex_groups: Vec<VertexGroup>,
    /// Quotient graph with vertex, edge and end stabilizers.
    pub graph: GraphOfGroups,
    /// Ramification index of the origami over the genus-1 base.
    pub ramification: u64,
    /// Index of the uniformizing group of the base curve; 2 for the extension.
    pub base_index: u64,
}

impl Presentation {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        let canonical = canonical_generator(name);
        self.generators.iter().position(|g| g == canonical)
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.generators)
    }
}

/// Accepts the Greek names used for the generators in the literature.
pub fn canonical_generator(name: &str) -> &str {
    match name {
        "σ" | "sigma" => "s",
        "δ" | "delta" => "d",
        "γ" | "gamma" => "g",
        "τ" | "tau" | "tau1" | "τ1" => "t1",
        "τ'" | "tau'" | "tau2" | "τ2" => "t2",
        other => other,
    }
}

/// First generating tuple of `group` whose orders match and which passes `extra`.
fn find_model(group: &FiniteGroup, orders: (u32, u32), extra: impl Fn(ElementId, ElementId) -> bool) -> (ElementId, ElementId) {
    let n = group.order() as ElementId;
    for x in 0..n {
        if group.element_order(x) != orders.0 {
            continue;
        }
        for y in 0..n {
            if group.element_order(y) == orders.1 && extra(x, y) && group.generates(x, y) {
                return (x, y);
            }
        }
    }
    panic!("no model generators in {}", group.spec());
}

/// Lists every element of `⟨gens⟩ ⊂ model` as a word, by breadth-first
/// search with right multiplication; the identity comes first.
fn vertex_words(model: &FiniteGroup, model_gens: &[ElementId], gen_words: &[Word]) -> Vec<Word> {
    let n = model.order();
    let mut word_of: Vec<Option<Word>> = vec![None; n];
    word_of[0] = Some(Word::default());
    let mut order = vec![0 as ElementId];
    let mut queue = VecDeque::from([0 as ElementId]);
    while let Some(x) = queue.pop_front() {
        let w = word_of[x as usize].clone().expect("visited");
        for (c, gw) in model_gens.iter().zip(gen_words) {
            let y = model.mul(x, *c);
            if word_of[y as usize].is_none() {
                word_of[y as usize] = Some(w.concat(gw));
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    order.into_iter().map(|x| word_of[x as usize].take().expect("visited")).collect()
}

fn relator(name: &str, word: Word) -> Relator {
    Relator { name: name.to_string(), word }
}

fn group(spec: GroupSpec) -> FiniteGroup {
    build_group(&spec).expect("catalog model groups are small")
}

/// `D_n` model with `s² = dⁿ = (sd)² = 1`.
fn dihedral_model(n: u32) -> (FiniteGroup, ElementId, ElementId) {
    let g = group(GroupSpec::Dihedral(n));
    let (s, d) = find_model(&g, (2, n), |s, d| g.element_order(g.mul(s, d)) == 2);
    (g, s, d)
}

pub fn build_presentation(entry: CatalogEntry, shape: Shape) -> Result<Presentation, PadicError> {
    let unsupported = || PadicError::UnsupportedShape { entry: entry.name(), shape };
    let names = |list: &[&str]| list.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match (shape, entry.family) {
        (Shape::Hnn, TriangleFamily::Dihedral(n)) => {
            let (s, d, g) = (0, 1, 2);
            let (model, ms, md) = dihedral_model(n);
            Ok(Presentation {
                entry,
                shape,
                generators: names(&["s", "d", "g"]),
                relators: vec![
                    relator("s^2", Word::power_of(s, 2)),
                    relator(&format!("d^{n}"), Word::power_of(d, n as i64)),
                    relator("(s d)^2", Word::letter(s).concat(&Word::letter(d)).power(2)),
                    relator("[g, s]", Word::commutator(&Word::letter(g), &Word::letter(s))),
                ],
                vertex_groups: vec![VertexGroup {
                    name: format!("D{n} = <s, d>"),
                    label: GroupLabel::Dihedral(n),
                    words: vertex_words(&model, &[ms, md], &[Word::letter(s), Word::letter(d)]),
                }],
                graph: graphs::dihedral_origami(n),
                ramification: n as u64,
                base_index: 1,
            })
        }
        (Shape::Hnn, TriangleFamily::Tetrahedral) => {
            let (s, d, g) = (0, 1, 2);
            let model = group(GroupSpec::Alternating(4));
            let (ms, md) = find_model(&model, (2, 3), |s, d| model.element_order(model.mul(d, s)) == 3);
            Ok(Presentation {
                entry,
                shape,
                generators: names(&["s", "d", "g"]),
                relators: vec![
                    relator("s^2", Word::power_of(s, 2)),
                    relator("d^3", Word::power_of(d, 3)),
                    relator("(d s)^3", Word::letter(d).concat(&Word::letter(s)).power(3)),
                    relator("[g, d]", Word::commutator(&Word::letter(g), &Word::letter(d))),
                ],
                vertex_groups: vec![VertexGroup {
                    name: "A4 = <s, d>".into(),
                    label: GroupLabel::A4,
                    words: vertex_words(&model, &[ms, md], &[Word::letter(s), Word::letter(d)]),
                }],
                graph: graphs::tetrahedral_origami(),
                ramification: 2,
                base_index: 1,
            })
        }
        (Shape::Hnn, TriangleFamily::Amalgam335(n)) => Ok(amalgam_hnn(entry, n)),
        (Shape::AutExtension, TriangleFamily::Dihedral(b)) => {
            let (s, d, g) = (0, 1, 2);
            let (big, bs, bd) = dihedral_model(2 * b);
            let (klein, ks, ku) = dihedral_model(2);
            let u = Word::letter(g).concat(&Word::power_of(d, b as i64));
            Ok(Presentation {
                entry,
                shape,
                generators: names(&["s", "d", "g"]),
                relators: vec![
                    relator("s^2", Word::power_of(s, 2)),
                    relator(&format!("d^{}", 2 * b), Word::power_of(d, 2 * b as i64)),
                    relator("(s d)^2", Word::letter(s).concat(&Word::letter(d)).power(2)),
                    relator("[g, s]", Word::commutator(&Word::letter(g), &Word::letter(s))),
                    relator(&format!("(g d^{b})^2"), u.power(2)),
                ],
                vertex_groups: vec![
                    VertexGroup {
                        name: format!("D2 = <s, g d^{b}>"),
                        label: GroupLabel::Dihedral(2),
                        words: vertex_words(&klein, &[ks, ku], &[Word::letter(s), u.clone()]),
                    },
                    VertexGroup {
                        name: format!("D{} = <s, d>", 2 * b),
                        label: GroupLabel::Dihedral(2 * b),
                        words: vertex_words(&big, &[bs, bd], &[Word::letter(s), Word::letter(d)]),
                    },
                ],
                graph: graphs::dihedral_aut_extension(b),
                ramification: b as u64,
                base_index: 2,
            })
        }
        _ => Err(unsupported()),
    }
}

/// Shortest word `w(s, t)` in `A₅ = ⟨s, t⟩` with `⟨s, w⟩ ≅ D₅`, i.e. `w` of
/// order 5 inverted by `s`. Letters: 0 = `s`, 1 = `t`.
fn dihedral_word_in_a5(model: &FiniteGroup, s: ElementId, t: ElementId) -> Word {
    let n = model.order();
    let mut word_of: Vec<Option<Word>> = vec![None; n];
    word_of[0] = Some(Word::default());
    let mut queue = VecDeque::from([0 as ElementId]);
    let steps = [(s, Word::letter(0)), (t, Word::letter(1)), (model.inv(t), Word::power_of(1, -1))];
    while let Some(x) = queue.pop_front() {
        let w = word_of[x as usize].clone().expect("visited");
        if model.element_order(x) == 5 && model.conj(s, x) == model.inv(x) {
            return w;
        }
        for (c, letter) in &steps {
            let y = model.mul(x, *c);
            if word_of[y as usize].is_none() {
                word_of[y as usize] = Some(w.concat(letter));
                queue.push_back(y);
            }
        }
    }
    panic!("A5 has dihedral subgroups of order 10 through every involution");
}

/// `⟨A₅ *_{D₅} D_{5n} *_{D₅} A₅, γ; γ t₁ γ⁻¹ = t₂⟩` with the shared `D₅`
/// generated by `s` and `rⁿ = w(s, t₁) = w(s, t₂)`.
fn amalgam_hnn(entry: CatalogEntry, n: u32) -> Presentation {
    let (s, r, t1, t2, g) = (0, 1, 2, 3, 4);
    let a5 = group(GroupSpec::Alternating(5));
    let (ms, mt) = find_model(&a5, (2, 3), |s, t| a5.element_order(a5.mul(s, t)) == 5);
    let w = dihedral_word_in_a5(&a5, ms, mt);
    let relabel = |t: usize| Word(w.0.iter().map(|&(l, e)| (if l == 0 { s } else { t }, e)).collect());
    let (w1, w2) = (relabel(t1), relabel(t2));
    let rn = Word::power_of(r, n as i64);
    let (dm, ds, dr) = dihedral_model(5 * n);
    let mut relators = vec![
        relator("s^2", Word::power_of(s, 2)),
        relator(&format!("r^{}", 5 * n), Word::power_of(r, 5 * n as i64)),
        relator("(s r)^2", Word::letter(s).concat(&Word::letter(r)).power(2)),
    ];
    for (t, wt, tag) in [(t1, &w1, "t1"), (t2, &w2, "t2")] {
        relators.push(relator(&format!("{tag}^3"), Word::power_of(t, 3)));
        relators.push(relator(&format!("(s {tag})^5"), Word::letter(s).concat(&Word::letter(t)).power(5)));
        relators.push(relator(&format!("r^{n} = w(s, {tag})"), rn.concat(&wt.inverse())));
    }
    relators.push(relator("g t1 g^-1 = t2", Word::letter(g).concat(&Word::letter(t1)).concat(&Word::power_of(g, -1)).concat(&Word::power_of(t2, -1))));
    let a5_words = |t: usize| vertex_words(&a5, &[ms, mt], &[Word::letter(s), Word::letter(t)]);
    Presentation {
        entry,
        shape: Shape::Hnn,
        generators: ["s", "r", "t1", "t2", "g"].iter().map(|x| x.to_string()).collect(),
        relators,
        vertex_groups: vec![
            VertexGroup { name: "A5 = <s, t1>".into(), label: GroupLabel::A5, words: a5_words(t1) },
            VertexGroup { name: "A5 = <s, t2>".into(), label: GroupLabel::A5, words: a5_words(t2) },
            VertexGroup {
                name: format!("D{} = <s, r>", 5 * n),
                label: GroupLabel::Dihedral(5 * n),
                words: vertex_words(&dm, &[ds, dr], &[Word::letter(s), Word::letter(r)]),
            },
        ],
        graph: graphs::amalgam_335_hnn(n),
        ramification: 5 * n as u64,
        base_index: 1,
    }
}

/// The word `w(s, t)` used to identify `rⁿ` inside each `A₅` copy, over
/// the letters `s` and `t`.
pub fn amalgam_identification_word() -> (Word, [String; 2]) {
    let a5 = group(GroupSpec::Alternating(5));
    let (ms, mt) = find_model(&a5, (2, 3), |s, t| a5.element_order(a5.mul(s, t)) == 5);
    (dihedral_word_in_a5(&a5, ms, mt), ["s".into(), "t".into()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(f: TriangleFamily) -> CatalogEntry {
        CatalogEntry::new(f)
    }

    #[test]
    fn word_algebra() {
        let w = Word::letter(0).concat(&Word::letter(1));
        assert_eq!(w.concat(&w.inverse()), Word::default());
        assert_eq!(w.power(2).0.len(), 4);
        assert_eq!(Word::power_of(0, 2).concat(&Word::power_of(0, -2)), Word::default());
        let names: Vec<String> = vec!["s".into(), "d".into()];
        assert_eq!(Word::commutator(&Word::letter(0), &Word::letter(1)).render(&names), "s d s^-1 d^-1");
    }

    #[test]
    fn presentation_sizes() {
        let p = build_presentation(entry(TriangleFamily::Dihedral(5)), Shape::Hnn).unwrap();
        assert_eq!(p.relators.len(), 4);
        assert_eq!(p.vertex_groups[0].words.len(), 10);
        let p = build_presentation(entry(TriangleFamily::Tetrahedral), Shape::Hnn).unwrap();
        assert_eq!(p.relators.len(), 4);
        assert_eq!(p.vertex_groups[0].words.len(), 12);
        let p = build_presentation(entry(TriangleFamily::Dihedral(5)), Shape::AutExtension).unwrap();
        assert_eq!(p.relators.len(), 5);
        assert_eq!(p.vertex_groups.iter().map(|v| v.words.len()).collect::<Vec<_>>(), vec![4, 20]);
        let p = build_presentation(entry(TriangleFamily::Amalgam335(2)), Shape::Hnn).unwrap();
        assert_eq!(p.vertex_groups.iter().map(|v| v.words.len()).collect::<Vec<_>>(), vec![60, 60, 20]);
    }

    #[test]
    fn unsupported_shapes() {
        for f in [TriangleFamily::Icosahedral, TriangleFamily::Octahedral] {
            assert!(matches!(build_presentation(entry(f), Shape::Hnn), Err(PadicError::UnsupportedShape { .. })));
        }
        assert!(build_presentation(entry(TriangleFamily::Tetrahedral), Shape::AutExtension).is_err());
    }

    #[test]
    fn vertex_words_close_in_their_model() {
        // Evaluating the vertex words in the model they came from gives each element once.
        let (model, s, d) = dihedral_model(7);
        let words = vertex_words(&model, &[s, d], &[Word::letter(0), Word::letter(1)]);
        let mut images: Vec<_> = words.iter().map(|w| w.eval(&model, &[s, d])).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 14);
    }

    #[test]
    fn identification_word_is_dihedral() {
        let a5 = group(GroupSpec::Alternating(5));
        let (s, t) = find_model(&a5, (2, 3), |s, t| a5.element_order(a5.mul(s, t)) == 5);
        let w = dihedral_word_in_a5(&a5, s, t).eval(&a5, &[s, t]);
        assert_eq!(a5.element_order(w), 5);
        assert_eq!(a5.closure_size(&[s, w]), 10);
    }
}
