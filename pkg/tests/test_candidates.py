import itertools
import random

import pytest

from fusenorm.candidates import (
    Candidate,
    PruneConfig,
    SentenceLattice,
    build_lattice,
    det_normalize,
    detokenize,
    generate,
)
from fusenorm.fst import Weight
from fusenorm.grammars import GrammarSet, Reading, SemioticClass, readings, tag

GRAMMAR = GrammarSet.default()


def brute_force_candidates(lattice, delta, cap=10**9):
    """Oracle: cross product of span readings, then filter by the bound."""
    options = [list(rs) for rs in lattice.span_readings]
    combos = []
    for chosen in itertools.product(*options):
        ticks = sum(r.weight.ticks for r in chosen)
        tokens = tuple(tok for r in chosen for tok in r.spoken)
        combos.append((ticks, tokens))
    if not combos:
        return [(0, ())]
    w_min = min(t for t, _ in combos)
    bound = w_min + Weight.of(delta).ticks
    kept = sorted(c for c in combos if c[0] <= bound)
    return kept[:cap]


def synthetic_lattice(rng, max_spans=6, max_readings=4):
    """Random lattice straight from synthetic readings, bypassing the tagger."""
    from fusenorm.candidates import _span_machine
    from fusenorm.grammars.tagger import TokenSpan
    from fusenorm import fst

    n_spans = rng.randint(1, max_spans)
    spans = []
    all_readings = []
    for i in range(n_spans):
        semiotic = rng.random() < 0.7
        if semiotic:
            n_read = rng.randint(1, max_readings)
            rs = []
            seen = set()
            for j in range(n_read):
                ticks = rng.randint(10000, 10100)  # the legal band [1.0, 1.01]
                spoken = tuple(
                    rng.choice(["alpha", "beta", "gamma", "delta"])
                    for _ in range(rng.randint(1, 3))
                )
                if spoken in seen:
                    continue
                seen.add(spoken)
                rs.append(Reading(SemioticClass.DATE, spoken, Weight(ticks)))
            if rng.random() < 0.5:
                spoken = ("raw%d" % i,)
                if spoken not in seen:
                    rs.append(Reading(SemioticClass.PLAIN, spoken, Weight.of(100)))
            classes = frozenset({SemioticClass.DATE})
        else:
            rs = [Reading(SemioticClass.PLAIN, (f"word{i}",), Weight.of(100))]
            classes = frozenset({SemioticClass.PLAIN})
        span = TokenSpan(f"tok{i}", i * 5, i * 5 + 4, (f"tok{i}",), classes)
        spans.append(span)
        all_readings.append(tuple(rs))

    machine = None
    block_starts = []
    offset = 0
    for span, rs in zip(spans, all_readings):
        block_starts.append(offset)
        part = _span_machine(span, list(rs))
        offset += part.num_states
        machine = part if machine is None else fst.concat(machine, part)
    base = Weight.zero()
    k = 0
    for span, rs in zip(spans, all_readings):
        if span.is_semiotic:
            k += 1
        else:
            base = base + rs[0].weight
    return SentenceLattice(
        machine, tuple(spans), tuple(all_readings), k, base, tuple(block_starts)
    )


class TestBuildLattice:
    def test_fig2_min_weight(self):
        lattice = build_lattice("The train leaves on 1/4", GRAMMAR)
        assert lattice.semiotic_count == 1
        assert lattice.base_weight == Weight.of(400)
        cands = generate(lattice, PruneConfig(delta=Weight.of(10)))
        assert cands[0].weight == Weight.of(401)

    def test_fig2_span_option_count(self):
        lattice = build_lattice("The train leaves on 1/4", GRAMMAR)
        semiotic_readings = [
            rs for s, rs in zip(lattice.spans, lattice.span_readings) if s.is_semiotic
        ]
        assert len(semiotic_readings) == 1
        assert len(semiotic_readings[0]) == 4

    def test_single_plain_word(self):
        lattice = build_lattice("hello", GRAMMAR)
        cands = generate(lattice)
        assert len(cands) == 1
        assert cands[0].text == "hello"
        assert cands[0].weight == Weight.of(100)

    def test_cups_cross_product(self):
        lattice = build_lattice("What's 1/2 cup plus 2/3 cup?", GRAMMAR)
        spans = tag("What's 1/2 cup plus 2/3 cup?", GRAMMAR)
        n1 = len(readings(spans[1], GRAMMAR))
        n2 = len(readings(spans[4], GRAMMAR))
        all_paths = generate(lattice, PruneConfig(delta=Weight.of(10**6), max_candidates=4096))
        assert len(all_paths) == n1 * n2

    def test_empty_sentence(self):
        lattice = build_lattice("", GRAMMAR)
        cands = generate(lattice)
        assert len(cands) == 1
        assert cands[0].text == ""
        assert cands[0].weight == Weight.zero()

    def test_weight_decomposition(self):
        lattice = build_lattice("Henry III visited on 1/4", GRAMMAR)
        for cand in generate(lattice, PruneConfig(delta=Weight.of(10**6), max_candidates=512)):
            chosen = 0
            for choice, rs in zip(cand.span_outputs, lattice.span_readings):
                r = next(x for x in rs if x.spoken == choice.spoken)
                chosen += r.weight.ticks
            assert chosen == cand.weight.ticks


class TestGenerate:
    def test_fig2_pruning(self):
        lattice = build_lattice("The train leaves on 1/4", GRAMMAR)
        cands = generate(lattice)
        texts = {c.text for c in cands}
        assert texts == {
            "The train leaves on January fourth",
            "The train leaves on one quarter",
            "The train leaves on one divided by four",
        }
        # the partially normalized option is ~404, beyond the 401.2 threshold
        dropped = generate(lattice, PruneConfig(delta=Weight.of(10)))
        assert "The train leaves on one/four" in {c.text for c in dropped}
        assert all(c.fully_normalized for c in cands)

    def test_single_path_lattice(self):
        lattice = build_lattice("nothing special here", GRAMMAR)
        cands = generate(lattice)
        assert len(cands) == 1

    def test_matches_brute_force_on_real_sentences(self):
        for sentence in [
            "The train leaves on 1/4",
            "What's 1/2 cup plus 2/3 cup?",
            "Henry III was born in 1970",
            "It's WeAreSC.com",
            "Set it to 75F",
        ]:
            lattice = build_lattice(sentence, GRAMMAR)
            got = generate(lattice, PruneConfig(delta=Weight.of(0.2), max_candidates=4096))
            expected = brute_force_candidates(lattice, 0.2)
            assert [(c.weight.ticks, c.tokens) for c in got] == expected

    def test_matches_brute_force_on_random_lattices(self):
        rng = random.Random(42)
        for _ in range(40):
            lattice = synthetic_lattice(rng, max_spans=3, max_readings=4)
            got = generate(lattice, PruneConfig(delta=Weight.of(0.2), max_candidates=4096))
            expected = brute_force_candidates(lattice, 0.2)
            assert [(c.weight.ticks, c.tokens) for c in got] == expected

    def test_never_empty(self):
        rng = random.Random(1)
        for _ in range(30):
            lattice = synthetic_lattice(rng)
            assert generate(lattice)

    def test_unchanged_semiotic_never_within_delta(self):
        rng = random.Random(2)
        for _ in range(40):
            lattice = synthetic_lattice(rng)
            for cand in generate(lattice):
                assert cand.fully_normalized == all(
                    not (c.is_semiotic and c.cls is SemioticClass.PLAIN)
                    for c in cand.span_outputs
                )
                normalizable = all(
                    any(r.cls is not SemioticClass.PLAIN for r in rs)
                    for s, rs in zip(lattice.spans, lattice.span_readings)
                    if s.is_semiotic
                )
                if normalizable:
                    assert cand.fully_normalized

    def test_max_candidates_cap(self):
        lattice = build_lattice("It's WeAreSC.com", GRAMMAR)
        cands = generate(lattice, PruneConfig(delta=Weight.of(10**6), max_candidates=3))
        assert len(cands) == 3
        weights = [c.weight.ticks for c in cands]
        assert weights == sorted(weights)


class TestDetNormalize:
    def test_fig1_sentence_prefers_date_micro_weight(self):
        cand = det_normalize("The train leaves on 1/4", GRAMMAR)
        assert cand.text == "The train leaves on January fourth"

    def test_plain_passthrough(self):
        assert det_normalize("hello world", GRAMMAR).text == "hello world"

    def test_matches_brute_force_argmin(self):
        rng = random.Random(7)
        for _ in range(30):
            lattice = synthetic_lattice(rng)
            expected = brute_force_candidates(lattice, 0)[0]
            got = generate(lattice, PruneConfig(delta=Weight.zero(), max_candidates=1))[0]
            assert (got.weight.ticks, got.tokens) == expected

    def test_empty(self):
        assert det_normalize("", GRAMMAR).text == ""


class TestSpanProvenance:
    def test_token_ranges_cover_semiotic_spans(self):
        cand = det_normalize("What's 1/2 cup plus 2/3 cup?", GRAMMAR)
        ranges = cand.semiotic_token_ranges
        assert len(ranges) == 2
        for start, end in ranges:
            assert 0 <= start < end <= len(cand.tokens)

    def test_chosen_reading_comes_from_grammar(self):
        for sentence in ["The train leaves on 1/4", "Henry III in 1970", "75F now"]:
            lattice = build_lattice(sentence, GRAMMAR)
            for cand in generate(lattice):
                for choice, rs in zip(cand.span_outputs, lattice.span_readings):
                    assert choice.spoken in {r.spoken for r in rs}


class TestDetokenize:
    def test_slash_glue(self):
        assert detokenize(["one", "/", "four"]) == "one/four"

    def test_question_mark(self):
        assert detokenize(["cup", "?"]) == "cup?"

    def test_plain_join(self):
        assert detokenize(["a", "b"]) == "a b"
