import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from testtdo.kb import KnowledgeBase
from testtdo.tkb import ParseError, parse, serialize


def test_parse_empty_document():
    kb = parse("")
    assert len(kb) == 0
    assert kb.finalized


def test_parse_individual_with_attrs():
    kb = parse('individual tc1 : TestCase { expected_result = "200 OK" }')
    ind = kb.individual("tc1")
    assert ind.type_name == "TestCase"
    assert ind.attrs == {"expected_result": "200 OK"}


def test_unresolved_link_identifier_reports_line():
    text = 'individual tc1 : TestCase { expected_result = "200 OK" }\nlink produces(prt1, tc1)'
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    (diag,) = excinfo.value.diagnostics
    assert "unresolved identifier 'prt1'" in diag.message
    assert diag.line == 2
    assert diag.column == text.splitlines()[1].index("prt1") + 1


def test_forward_references_resolve():
    kb = parse("link part_of(a, t)\nindividual a : DesignTesting\nindividual t : Testing")
    assert kb.has_link("part_of", "a", "t")


def test_process_motif_document_counts():
    text = """
    individual t : Testing
    individual a1 : DesignTesting
    individual a2 : PerformTesting
    individual a3 : AnalyzeTestResults
    link part_of(a1, t)
    link part_of(a2, t)
    link part_of(a3, t)
    """
    kb = parse(text)
    assert len(kb) == 4
    assert len(kb.links()) == 3


def test_duplicate_individual_id_diagnostic():
    with pytest.raises(ParseError) as excinfo:
        parse("individual a : TestCase\nindividual a : TestSuite")
    (diag,) = excinfo.value.diagnostics
    assert "duplicate individual id 'a'" in diag.message
    assert diag.line == 2


def test_unknown_statement_keyword_recovers():
    text = "frobnicate a : TestCase\nindividual b : TestCase\nlink produces(b, ghost)"
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    messages = [d.message for d in excinfo.value.diagnostics]
    assert any("expected 'individual' or 'link'" in m for m in messages)
    assert any("unresolved identifier 'ghost'" in m for m in messages)


def test_lexical_diagnostics():
    with pytest.raises(ParseError) as excinfo:
        parse("individual a : TestCase\n@")
    assert any("unexpected character" in d.message for d in excinfo.value.diagnostics)

    with pytest.raises(ParseError) as excinfo:
        parse('individual a : TestCase { input = "unterminated }')
    assert any("unterminated string" in d.message for d in excinfo.value.diagnostics)

    with pytest.raises(ParseError) as excinfo:
        parse('individual a : TestCase { input = "bad \\q escape" }')
    assert any("invalid escape" in d.message for d in excinfo.value.diagnostics)


def test_comments_and_crlf():
    text = '# heading\r\nindividual a : TestCase # trailing\r\nlink part_of(a, a)\r\n'
    kb = parse(text)
    assert len(kb) == 1 and len(kb.links()) == 1
    assert parse(text.replace("\r\n", "\n")) == kb


def test_error_recovery_reports_all_statements():
    text = "individual : TestCase\nindividual b :\nlink produces(\n"
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    assert len(excinfo.value.diagnostics) >= 3


def test_serialize_empty():
    assert serialize(KnowledgeBase().finalize()) == ""


def test_serialize_canonical_order():
    first = KnowledgeBase()
    first.add_individual("b", "TestSuite")
    first.add_individual("a", "TestCase", {"input": "x", "expected_result": "y"})
    first.add_link("produces", "b", "a")
    first.add_link("consumes", "b", "a")
    second = KnowledgeBase()
    second.add_individual("a", "TestCase", {"expected_result": "y", "input": "x"})
    second.add_link("consumes", "b", "a")
    second.add_individual("b", "TestSuite")
    second.add_link("produces", "b", "a")
    assert serialize(first.finalize()) == serialize(second.finalize())


def test_round_trip_with_escapes():
    kb = KnowledgeBase()
    kb.add_individual("a", "TestCase", {"input": 'quote " backslash \\ newline \n end'})
    kb.finalize()
    assert parse(serialize(kb)) == kb


def test_serialize_rejects_carriage_return_values():
    kb = KnowledgeBase()
    kb.add_individual("a", "TestCase", {"input": "bad\rvalue"})
    kb.finalize()
    with pytest.raises(ValueError):
        serialize(kb)


def test_round_trip_idempotent_on_sample():
    text = 'individual z : Testing\nindividual a : TestCase { input = "x" }\nlink consumes(z, a)\n'
    kb = parse(text)
    once = serialize(kb)
    assert parse(once) == kb
    assert serialize(parse(once)) == once


_ident = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,8}", fullmatch=True)
_value = st.text(alphabet=st.characters(blacklist_characters="\r", blacklist_categories=("Cs",)), max_size=20)
_types = st.sampled_from(["TestCase", "Testing", "TestableEntity", "Artifact", "Foo"])


@settings(max_examples=60, deadline=None)
@given(
    individuals=st.dictionaries(_ident, st.tuples(_types, st.dictionaries(_ident, _value, max_size=3)), max_size=6),
    rels=st.lists(st.sampled_from(["produces", "consumes", "part_of"]), max_size=6),
    data=st.data(),
)
def test_round_trip_random_models(individuals, rels, data):
    kb = KnowledgeBase()
    for ind_id, (type_name, attrs) in individuals.items():
        kb.add_individual(ind_id, type_name, attrs)
    ids = sorted(individuals)
    for rel in rels if ids else []:
        kb.add_link(rel, data.draw(st.sampled_from(ids)), data.draw(st.sampled_from(ids)))
    kb.finalize()
    text = serialize(kb)
    reparsed = parse(text)
    assert reparsed == kb
    assert serialize(reparsed) == text
