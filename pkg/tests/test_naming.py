import rdfsummarize as rs
from rdfsummarize.classes import TypeClassMap
from rdfsummarize.naming import candidate_name, name_classes


def graph_and_map(*groups_of_iris):
    rows = []
    for iris in groups_of_iris:
        for iri in iris:
            rows.append(f'<{iri}> <urn:n:tag> "member" .')
    g = rs.parse_ntriples("\n".join(rows))
    ids = {g.display(u): u for u in g.subjects}
    cm = TypeClassMap([[ids[i] for i in iris] for iris in groups_of_iris])
    return g, cm


class TestCandidateName:
    def test_numeric_suffix_after_colon(self):
        assert candidate_name(
            "http://semdb.example.org/SurgeryProcedure:236") == "SurgeryProcedure"

    def test_trailing_digits(self):
        assert candidate_name("urn:lubm:Student49") == "Student"

    def test_underscore_separator_merges(self):
        assert candidate_name("http://x/Surgery_Procedure12") == "SurgeryProcedure"

    def test_all_numeric_gives_empty(self):
        assert candidate_name("http://x/12345") == ""


class TestNameClasses:
    def test_shared_compound_name_is_kept_whole(self):
        g, cm = graph_and_map(
            ["http://semdb.example.org/SurgeryProcedure:236",
             "http://semdb.example.org/SurgeryProcedure:104"])
        assert name_classes(g, cm) == {0: "C-SurgeryProcedure"}

    def test_single_member_strips_digits(self):
        g, cm = graph_and_map(["urn:lubm:Student49"])
        assert name_classes(g, cm) == {0: "C-Student"}

    def test_duplicate_base_names_get_suffixes(self):
        g, cm = graph_and_map(
            ["urn:x:Event:184", "urn:x:Event:81"],
            ["urn:x:Event:200", "urn:x:Event:201"])
        assert sorted(name_classes(g, cm).values()) == ["C-Event-1", "C-Event-2"]

    def test_majority_vote_with_tie_breaks_lexicographically(self):
        g, cm = graph_and_map(
            ["urn:x:Zebra1", "urn:x:Apple1", "urn:x:Zebra2", "urn:x:Apple2"])
        assert name_classes(g, cm) == {0: "C-Apple"}

    def test_tokenless_members_fall_back_to_unnamed(self):
        g, cm = graph_and_map(["http://x/111", "http://x/222"])
        assert name_classes(g, cm) == {0: "C-Unnamed-0"}

    def test_deterministic_and_unique(self, semdb_graph):
        g = semdb_graph
        res = rs.run_sim_measure(g, rs.IterationParams())
        cm = rs.create_classes(res.matrix, res.pairs, 0.3, subjects=g.subjects)
        names1 = name_classes(g, cm)
        names2 = name_classes(g, cm)
        assert names1 == names2
        assert len(set(names1.values())) == len(names1)
