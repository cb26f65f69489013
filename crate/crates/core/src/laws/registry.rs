//! The law table.
//!
//! Ids are stable keys. Proved laws follow the numbering `propN.k`,
//! `thmN.k`; primed variants (`prop7p.3`) restate an item with the combined
//! `⊂ₛₒₜ` premise. Refuted laws are prefixed `exam-` and named after the
//! example that defeats them.

use std::sync::OnceLock;

use super::formula::{
    all, any, big_inter, big_union, equal, equiv, everywhere, exists_member, for_all_members, iff,
    sot, sub, var, Binding, Formula, Term,
};
use super::generate::{Hint, Slot};
use super::{Law, Status};
use crate::degree::Degree;
use crate::hfe::Hfe;
use crate::hfs::{Hfs, Universe};
use crate::relations::RelationKind::{self, *};

fn a() -> Term {
    var("A")
}
fn b() -> Term {
    var("B")
}
fn c() -> Term {
    var("C")
}

fn proved(id: &str, guard: Formula, claim: Formula) -> Law {
    Law::new(id, Status::Proved, guard, claim)
}

fn refuted(id: &str, guard: Formula, claim: Formula) -> Law {
    Law::new(id, Status::Refuted, guard, claim)
}

fn set_slot(name: &str) -> Slot {
    Slot::Set(name.to_string())
}

fn rel_hint(kind: RelationKind, lo: &str, hi: &str) -> Hint {
    Hint::Rel {
        kind,
        lo: set_slot(lo),
        hi: set_slot(hi),
    }
}

type Rows<'a> = &'a [&'a [&'a str]];

/// Binding over the given element ids; each set lists one row per element.
fn fixture(ids: &[&str], sets: &[(&str, Rows<'_>)]) -> Binding {
    let universe = Universe::new(ids.iter().copied()).expect("fixture universe");
    let mut binding = Binding::new(universe.clone());
    for (name, rows) in sets {
        let memberships = rows
            .iter()
            .map(|r| Hfe::parse(r).expect("fixture degrees"))
            .collect();
        binding.insert_set(*name, Hfs::from_hfes(universe.clone(), memberships).expect("fixture set"));
    }
    binding
}

/// Keeps only the named sets.
fn restrict(binding: &Binding, names: &[&str]) -> Binding {
    let mut out = Binding::new(binding.universe().clone());
    for n in names {
        out.insert_set(*n, binding.set(n).expect("fixture set").clone());
    }
    out
}

fn mean_example() -> Binding {
    fixture(
        &["x", "y", "z"],
        &[
            ("A", &[&["0.1", "0.8"], &["0.1", "0.8"], &["0.7", "0.9"]]),
            ("B", &[&["0.7", "0.9"], &["0.1", "0.9"], &["0.1", "0.8"]]),
        ],
    )
}

fn sot_example() -> Binding {
    fixture(
        &["x", "y"],
        &[
            ("A", &[&["0.1", "0.2", "0.5", "0.6", "0.9"], &["0.1", "0.7"]]),
            ("B", &[&["0.05", "0.3", "0.4", "0.7", "0.8"], &["0.8", "0.9", "0.9"]]),
        ],
    )
}

fn strict_example() -> Binding {
    fixture(
        &["x"],
        &[("A", &[&["0.1", "0.3", "0.5"]]), ("B", &[&["0.2", "0.4", "0.6"]])],
    )
}

fn converse_example() -> Binding {
    fixture(
        &["x"],
        &[
            ("A", &[&["0.3", "0.5", "0.7"]]),
            ("B", &[&["0.8", "0.9"]]),
            ("C", &[&["0.6", "0.8", "0.9"]]),
        ],
    )
}

/// Three sets over eight elements, each element defeating some monotonicity
/// claim for intersection or union with a third set.
pub(crate) fn monotonicity_example() -> Binding {
    fixture(
        &["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"],
        &[
            (
                "A",
                &[
                    &["0.2", "0.4"],
                    &["0.2", "0.5"],
                    &["0.3", "0.5"],
                    &["0.5", "0.6"],
                    &["0.6", "0.7"],
                    &["0.3", "0.4"],
                    &["0.3", "0.4"],
                    &["0.3", "0.4"],
                ],
            ),
            (
                "B",
                &[
                    &["0.1", "0.1", "0.5"],
                    &["0.1", "0.8"],
                    &["0.4", "0.41"],
                    &["0.6", "0.7"],
                    &["0.8", "0.9"],
                    &["0.1", "0.1", "0.3", "0.5"],
                    &["0.1", "0.1", "0.3", "0.5"],
                    &["0.5", "0.8"],
                ],
            ),
            (
                "C",
                &[
                    &["0.1", "0.2"],
                    &["0.5"],
                    &["0.45", "0.45"],
                    &["0.7", "0.8"],
                    &["0.1", "0.7"],
                    &["0.3", "0.4"],
                    &["0.1", "0.4"],
                    &["0.8", "0.9"],
                ],
            ),
        ],
    )
}

fn complement_example() -> Binding {
    fixture(
        &["x", "y"],
        &[
            ("A", &[&["0.4", "0.4"], &["0.2", "0.25"]]),
            ("B", &[&["0.1", "0.1", "0.41"], &["0.1", "0.2", "0.3"]]),
        ],
    )
}

pub(crate) fn absorption_example() -> Binding {
    fixture(
        &["x"],
        &[
            ("A", &[&["0.1", "0.2", "0.3"]]),
            ("B", &[&["0.3", "0.4", "0.5"]]),
            ("C", &[&["0.3", "0.45", "0.5"]]),
        ],
    )
}

fn project(binding: &Binding, id: &str) -> Binding {
    binding.project(id).expect("fixture element")
}

fn kind_name(k: RelationKind) -> char {
    k.letter()
}

fn binary_laws(out: &mut Vec<Law>) {
    out.push(proved("thm1.1", Formula::True, equal(a().c().c(), a())));
    out.push(proved("thm1.2", Formula::True, equal(a().cap(b()).c(), a().c().cup(b().c()))));
    out.push(proved("thm1.3", Formula::True, equal(a().cup(b()).c(), a().c().cap(b().c()))));
    out.push(proved(
        "thm1.4",
        Formula::True,
        all(vec![equal(a().cap(b()), b().cap(a())), equal(a().cup(b()), b().cup(a()))]),
    ));
    out.push(proved(
        "thm1.5",
        Formula::True,
        all(vec![
            equal(a().cap(b()).cap(c()), a().cap(b().cap(c()))),
            equal(a().cup(b()).cup(c()), a().cup(b().cup(c()))),
        ]),
    ));
}

fn implication_laws(out: &mut Vec<Law>) {
    let items = [(A, P), (S, P), (S, A), (S, M), (T, P), (N, P), (N, A), (N, M)];
    for (i, (from, to)) in items.into_iter().enumerate() {
        let mut law = proved(&format!("prop2.{}", i + 1), sub(from, a(), b()), sub(to, a(), b()));
        if i == 2 {
            law = law.fixture(
                "strong-pair",
                fixture(&["x"], &[("A", &[&["0.7", "0.5", "0.5"]]), ("B", &[&["0.8", "0.6", "0.5"]])]),
            );
        }
        out.push(law);
    }
    out.push(proved("prop2.9", sub(N, a(), b()), sot(a(), b())));
}

fn meet_join_laws(out: &mut Vec<Law>) {
    for (n, kind) in [(3, P), (4, A)] {
        out.push(proved(
            &format!("prop{n}.1"),
            Formula::True,
            all(vec![sub(kind, a().cap(b()), a()), sub(kind, a().cap(b()), b())]),
        ));
        out.push(proved(
            &format!("prop{n}.2"),
            Formula::True,
            all(vec![sub(kind, a(), a().cup(b())), sub(kind, b(), a().cup(b()))]),
        ));
        out.push(proved(&format!("prop{n}.3"), Formula::True, sub(kind, a().cap(b()), a().cup(b()))));
    }

    out.push(proved(
        "prop5.1",
        Formula::True,
        everywhere(any(vec![
            Formula::Rel(M, a().cap(b()), a()),
            Formula::Rel(M, a().cap(b()), b()),
        ])),
    ));
    out.push(proved(
        "prop5.2",
        Formula::True,
        everywhere(any(vec![
            Formula::Rel(M, a(), a().cup(b())),
            Formula::Rel(M, b(), a().cup(b())),
        ])),
    ));
    out.push(proved("prop5.3", Formula::True, sub(M, a().cap(b()), a().cup(b()))));
    out.push(proved("prop5.4", sub(M, a(), b()), sub(M, a().cap(b()), b())));
    out.push(proved("prop5.5", sub(M, a(), b()), sub(M, a(), a().cup(b()))));

    out.push(proved(
        "prop6.1",
        Formula::True,
        all(vec![sot(a(), a().cup(b())), sot(b(), a().cup(b()))]),
    ));
    out.push(proved("prop6.2", Formula::True, sot(a().cap(b()), a().cup(b()))));

    for (i, kind) in [P, A, S, T, N].into_iter().enumerate() {
        out.push(proved(&format!("prop7.{}", i + 1), sub(kind, a(), b()), sot(a(), a().cap(b()))));
    }
    out.push(proved("prop7p.3", sot(a(), b()), sot(a(), a().cap(b()))));

    out.push(proved("prop8.1", sub(N, a(), b()), sub(N, a().cap(b()), b())));
    out.push(proved("prop8.2", sub(N, a(), b()), sub(N, a(), a().cup(b()))));
    out.push(proved("prop8.3", sub(N, a(), b()), sub(N, a().cap(b()), a().cup(b()))));
}

fn third_set_laws(out: &mut Vec<Law>) {
    let bc = || b().cup(c());
    out.push(proved("prop9.1", sub(P, a(), b()), sub(P, a(), bc())));
    out.push(proved("prop9.2", sub(A, a(), b()), sub(A, a(), bc())));
    out.push(proved("prop9.3", sub(S, a(), b()), sot(a(), bc())));
    out.push(proved("prop9.4", sub(T, a(), b()), sot(a(), bc())));
    out.push(proved("prop9.5", sub(N, a(), b()), sot(a(), bc())));
    out.push(proved("prop9p.1", sot(a(), b()), sot(a(), bc())));

    let meet = [(P, P), (A, A), (S, A), (T, P), (N, A)];
    for (i, (from, to)) in meet.into_iter().enumerate() {
        out.push(proved(
            &format!("prop10.{}", i + 1),
            sub(from, a(), b()),
            sub(to, a().cap(c()), b().cap(c())),
        ));
    }
    for (i, (from, to)) in meet.into_iter().enumerate() {
        out.push(proved(
            &format!("prop11.{}", i + 1),
            sub(from, a(), b()),
            sub(to, a().cup(c()), b().cup(c())),
        ));
    }
    for (i, from) in [S, T, N].into_iter().enumerate() {
        out.push(proved(
            &format!("prop11.{}", i + 6),
            sub(from, a(), b()),
            sot(a().cup(c()), b().cup(c())),
        ));
    }
    out.push(proved("prop11p.1", sot(a(), b()), sot(a().cup(c()), b().cup(c()))));

    for (i, kind) in [P, A].into_iter().enumerate() {
        out.push(
            proved(
                &format!("propmeet.{}", i + 1),
                Formula::True,
                iff(
                    all(vec![sub(kind, a(), b()), sub(kind, a(), c())]),
                    sub(kind, a(), b().cap(c())),
                ),
            )
            .hint(rel_hint(kind, "A", "B"))
            .hint(rel_hint(kind, "A", "C")),
        );
    }
    out.push(proved(
        "propmeet.3",
        all(vec![sub(T, a(), b()), sub(T, a(), c())]),
        sub(T, a(), b().cap(c())),
    ));
    out.push(
        proved(
            "propmeet.4",
            Formula::True,
            iff(all(vec![sub(N, a(), b()), sub(N, a(), c())]), sub(N, a(), b().cap(c()))),
        )
        .hint(rel_hint(N, "A", "B"))
        .hint(rel_hint(N, "A", "C")),
    );
}

fn complement_and_transitivity_laws(out: &mut Vec<Law>) {
    out.push(proved("prop12.1", sub(A, a(), b()), sub(A, b().c(), a().c())));
    out.push(proved("prop12.2", sub(M, a(), b()), sub(M, b().c(), a().c())));
    out.push(proved("prop12.3", sub(S, a(), b()), sot(b().c(), a().c())));
    out.push(proved("prop12.4", sub(N, a(), b()), sub(N, b().c(), a().c())));

    for (i, kind) in RelationKind::ALL.into_iter().enumerate() {
        out.push(proved(
            &format!("prop13.{}", i + 1),
            all(vec![sub(kind, a(), b()), sub(kind, b(), c())]),
            sub(kind, a(), c()),
        ));
    }
}

fn equality_laws(out: &mut Vec<Law>) {
    let weak = || all(vec![equiv(P, a(), b()), equiv(A, a(), b()), equiv(M, a(), b())]);
    out.push(proved("thm2.1", equal(a(), b()), weak()));
    out.push(
        proved("thm2.2", Formula::True, iff(equiv(S, a(), b()), equal(a(), b()))).hint(Hint::Same {
            a: set_slot("A"),
            b: set_slot("B"),
        }),
    );
    out.push(proved("thm2.3", equiv(S, a(), b()), weak()));
    out.push(
        proved("thm2.4", equiv(N, a(), b()), everywhere(Formula::AllEqual(a(), b())))
            .hint(Hint::Constant(set_slot("A"))),
    );
    out.push(proved("thm2.5", equiv(N, a(), b()), weak()).hint(Hint::Constant(set_slot("A"))));

    for kind in [P, A, M] {
        out.push(proved(
            &format!("thm3.idem-{}", kind_name(kind)),
            Formula::True,
            all(vec![equiv(kind, a().cap(a()), a()), equiv(kind, a().cup(a()), a())]),
        ));
    }
    for kind in [P, A] {
        out.push(
            proved(
                &format!("thm3.abs-{}", kind_name(kind)),
                Formula::True,
                all(vec![
                    equiv(kind, a().cup(b()).cap(a()), a()),
                    equiv(kind, a().cap(b()).cup(a()), a()),
                ]),
            )
            .fixture("absorption", restrict(&absorption_example(), &["A", "B"])),
        );
    }
    for kind in [P, A] {
        out.push(
            proved(
                &format!("thm3.distrib-{}", kind_name(kind)),
                Formula::True,
                all(vec![
                    equiv(kind, a().cup(b()).cap(c()), c().cap(a()).cup(c().cap(b()))),
                    equiv(kind, a().cap(b()).cup(c()), c().cup(a()).cap(c().cup(b()))),
                ]),
            )
            .fixture("absorption", absorption_example()),
        );
    }
}

fn family_laws(out: &mut Vec<Law>) {
    let (meet, join) = (|| big_inter("F"), || big_union("F"));
    out.push(proved("thm4.1", Formula::True, sub(P, meet(), join())));
    out.push(proved("thm4.2", Formula::True, sub(A, meet(), join())));
    out.push(proved("thm4.3", Formula::True, sub(M, meet(), join())));
    out.push(proved("thm4.4", Formula::True, sot(meet(), join())));

    let h = || var("H");
    let every = |kind| for_all_members("H", "F", sub(kind, a(), h()));
    let some = |kind| exists_member("H", "F", sub(kind, a(), h()));
    let members_hint = |kind| Hint::Rel {
        kind,
        lo: set_slot("A"),
        hi: Slot::Members("F".into()),
    };
    out.push(proved("thm5.1", Formula::True, iff(every(P), sub(P, a(), meet()))).hint(members_hint(P)));
    out.push(proved("thm5.2", some(P), sub(P, a(), join())));
    out.push(proved("thm5.3", Formula::True, iff(every(A), sub(A, a(), meet()))).hint(members_hint(A)));
    out.push(proved("thm5.4", some(A), sub(A, a(), join())));
    out.push(proved("thm5.5", every(T), sub(T, a(), meet())));
    out.push(
        proved(
            "thm5.6",
            all(vec![
                some(T),
                for_all_members("H", "F", everywhere(Formula::Shorter(a(), h()))),
            ]),
            sub(T, a(), join()),
        )
        .hint(members_hint(T)),
    );
    out.push(proved("thm5.7", Formula::True, iff(every(N), sub(N, a(), meet()))).hint(members_hint(N)));
    out.push(proved("thm5.8", some(N), sub(N, a(), join())));

    let guard = || {
        all(vec![
            Formula::Subfamily("F1".into(), "F2".into()),
            Formula::DistinctMembers("F1".into()),
            Formula::DistinctMembers("F2".into()),
        ])
    };
    let (m1, j1, m2, j2) = (|| big_inter("F1"), || big_union("F1"), || big_inter("F2"), || big_union("F2"));
    let items = [
        sub(P, m2(), m1()),
        sub(P, j1(), j2()),
        sub(P, m1(), j2()),
        sub(A, m2(), m1()),
        sub(A, j1(), j2()),
        sub(A, m1(), j2()),
        sot(j1(), j2()),
        sot(m1(), j2()),
    ];
    for (i, claim) in items.into_iter().enumerate() {
        out.push(proved(&format!("thm6.{}", i + 1), guard(), claim));
    }
}

fn refuted_laws(out: &mut Vec<Law>) {
    let mean = mean_example();
    out.push(
        refuted("exam-sec2.3-m-intersection", Formula::True, sub(M, a().cap(b()), a()))
            .fixture("xyz", mean.clone()),
    );
    out.push(
        refuted("exam-sec2.3-m-intersection-b", Formula::True, sub(M, a().cap(b()), b()))
            .fixture("xyz", mean.clone()),
    );
    out.push(
        refuted("exam-sec2.3-m-union", Formula::True, sub(M, b(), a().cup(b())))
            .fixture("xyz", mean),
    );

    let so = sot_example();
    out.push(
        refuted("exam-sec2.3-sot-intersection-a", Formula::True, sot(a().cap(b()), a()))
            .fixture("xy", so.clone()),
    );
    out.push(
        refuted("exam-sec2.3-sot-intersection-b", Formula::True, sot(a().cap(b()), b()))
            .fixture("xy", so),
    );

    let strict = strict_example();
    let n_claims = [
        ("n-meet-left", sub(N, a().cap(b()), a())),
        ("n-meet-right", sub(N, a().cap(b()), b())),
        ("n-join-left", sub(N, a(), a().cup(b()))),
        ("n-join-right", sub(N, b(), a().cup(b()))),
        ("n-meet-join", sub(N, a().cap(b()), a().cup(b()))),
    ];
    for (name, claim) in n_claims {
        out.push(
            refuted(&format!("exam-sec2.3-{name}"), Formula::True, claim).fixture("x", strict.clone()),
        );
    }

    out.push(
        refuted(
            "exam-sec2.4-meet-t-converse",
            sub(T, a(), b().cap(c())),
            all(vec![sub(T, a(), b()), sub(T, a(), c())]),
        )
        .fixture("x", converse_example()),
    );

    let big = monotonicity_example();
    let cases: [(RelationKind, bool, RelationKind, &str); 28] = [
        (P, true, M, "x1"),
        (P, true, T, "x1"),
        (P, true, A, "x2"),
        (P, false, M, "x1"),
        (P, false, A, "x1"),
        (P, false, T, "x1"),
        (A, true, M, "x5"),
        (A, true, T, "x5"),
        (A, false, M, "x8"),
        (A, false, T, "x5"),
        (M, true, P, "x3"),
        (M, true, M, "x2"),
        (M, false, P, "x3"),
        (M, false, M, "x4"),
        (S, true, M, "x5"),
        (S, true, T, "x5"),
        (S, false, M, "x4"),
        (S, false, T, "x5"),
        (T, true, M, "x6"),
        (T, true, A, "x6"),
        (T, true, T, "x6"),
        (T, false, M, "x7"),
        (T, false, A, "x7"),
        (T, false, T, "x6"),
        (N, true, M, "x5"),
        (N, true, T, "x5"),
        (N, false, M, "x8"),
        (N, false, T, "x5"),
    ];
    for (guard, is_meet, claim, element) in cases {
        let (op, lhs, rhs) = if is_meet {
            ("meet", a().cap(c()), b().cap(c()))
        } else {
            ("join", a().cup(c()), b().cup(c()))
        };
        let id = format!(
            "exam-sec2.5-{}-{op}-{}",
            kind_name(guard),
            kind_name(claim)
        );
        out.push(refuted(&id, sub(guard, a(), b()), sub(claim, lhs, rhs)).fixture(element, project(&big, element)));
    }

    let compl = complement_example();
    out.push(
        refuted("exam-compl-p-p", sub(P, a(), b()), sub(P, b().c(), a().c()))
            .fixture("x", project(&compl, "x"))
            .fixture("y", project(&compl, "y")),
    );
    out.push(
        refuted("exam-compl-p-m", sub(P, a(), b()), sub(M, b().c(), a().c()))
            .fixture("x", project(&compl, "x")),
    );
    for kind in RelationKind::ALL {
        out.push(
            refuted(
                &format!("exam-compl-t-{}", kind_name(kind)),
                sub(T, a(), b()),
                sub(kind, b().c(), a().c()),
            )
            .fixture("y", project(&compl, "y")),
        );
    }

    let abs = absorption_example();
    let pairs: [(&str, Term, Term, bool); 4] = [
        ("absorb-join", a().cap(b()).cup(a()), a(), false),
        ("absorb-meet", a().cup(b()).cap(a()), a(), false),
        ("distrib", a().cup(b()).cap(c()), a().cap(c()).cup(b().cap(c())), true),
        ("distrib-dual", a().cap(b()).cup(c()), a().cup(c()).cap(b().cup(c())), true),
    ];
    for (name, lhs, rhs, uses_c) in pairs {
        let binding = if uses_c { abs.clone() } else { restrict(&abs, &["A", "B"]) };
        let claims = [
            ("eq", equal(lhs.clone(), rhs.clone())),
            ("n", equiv(N, lhs.clone(), rhs.clone())),
            ("m", equiv(M, lhs, rhs)),
        ];
        for (suffix, claim) in claims {
            out.push(
                refuted(&format!("exam-sec2.6-{name}-{suffix}"), Formula::True, claim)
                    .fixture("x", binding.clone()),
            );
        }
    }
    let point_four = Degree::new(2, 5).expect("0.4");
    out.push(
        refuted(
            "exam-sec2.6-membership",
            Formula::True,
            everywhere(iff(
                Formula::Contains(a().cap(b()).cup(c()), point_four),
                Formula::Contains(a().cup(c()).cap(b().cup(c())), point_four),
            )),
        )
        .fixture("x", abs),
    );
}

fn build() -> Vec<Law> {
    let mut laws = Vec::new();
    binary_laws(&mut laws);
    implication_laws(&mut laws);
    meet_join_laws(&mut laws);
    third_set_laws(&mut laws);
    complement_and_transitivity_laws(&mut laws);
    equality_laws(&mut laws);
    family_laws(&mut laws);
    refuted_laws(&mut laws);
    laws
}

/// Every law, proved ones first, in a fixed order.
pub fn law_registry() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(build)
}

pub fn find_law(id: &str) -> Option<&'static Law> {
    law_registry().iter().find(|l| l.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::evaluate_law;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_counts_meet_the_floor() {
        let laws = law_registry();
        let ids: HashSet<_> = laws.iter().map(|l| l.id.as_str()).collect();
        assert_eq!(ids.len(), laws.len());
        let proved = laws.iter().filter(|l| l.status == Status::Proved).count();
        let refuted = laws.len() - proved;
        assert!(proved >= 95, "{proved} proved laws");
        assert!(refuted >= 15, "{refuted} refuted laws");
    }

    #[test]
    fn fixtures_bind_exactly_the_law_variables() {
        for law in law_registry() {
            for f in &law.fixtures {
                law.check_binding(&f.binding)
                    .unwrap_or_else(|e| panic!("{} / {}: {e}", law.id, f.name));
            }
        }
    }

    #[test]
    fn refuted_fixtures_falsify_and_proved_fixtures_do_not() {
        for law in law_registry() {
            match law.status {
                Status::Refuted => assert!(!law.fixtures.is_empty(), "{}", law.id),
                Status::Proved => {}
            }
            for f in &law.fixtures {
                let v = evaluate_law(law, &f.binding).unwrap();
                match law.status {
                    Status::Refuted => assert!(v.is_violation(), "{} / {}: {v:?}", law.id, f.name),
                    Status::Proved => assert!(!v.is_violation(), "{} / {}", law.id, f.name),
                }
            }
        }
    }

    #[test]
    fn documented_entries() {
        let l = find_law("prop2.9").unwrap();
        assert_eq!(l.statement(), "A ⊂ₙ B ⇒ A ⊂ₛₒₜ B");
        assert_eq!(find_law("exam-sec2.6-distrib-m").unwrap().status, Status::Refuted);
        assert_eq!(find_law("thm5.6").unwrap().arity(), 2);
        assert_eq!(find_law("thm6.1").unwrap().family_vars(), ["F1", "F2"]);
    }
}
