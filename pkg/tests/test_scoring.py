import http.server
import json
import math
import random
import threading
import time

import pytest

from fusenorm.candidates import PruneConfig, build_lattice, generate
from fusenorm.errors import ScorerError
from fusenorm.grammars import GrammarSet
from fusenorm.scoring import (
    AUTOREGRESSIVE,
    MASKED,
    NgramModel,
    RemoteScorer,
    Score,
    ScoreRequest,
    mlm_aggregate,
    mlm_score_variant,
    remote_score,
    score_autoregressive,
    score_candidates,
    select_best,
    train_ngram,
)

GRAMMAR = GrammarSet.default()


class UniformMaskedScorer:
    """P = 1/V for every token: PLL is exactly log V regardless of content."""

    def __init__(self, vocab_size):
        self.vocab_size = vocab_size

    def masked_score(self, tokens, premask):
        return math.log(self.vocab_size)


class ProgrammedMaskedScorer:
    """Returns scripted values keyed by the premask set; records calls."""

    def __init__(self, values):
        self.values = values
        self.calls = []

    def masked_score(self, tokens, premask):
        self.calls.append((tuple(tokens), tuple(premask)))
        return self.values[tuple(premask)]


class ConstantMaskedScorer:
    def __init__(self, value):
        self.value = value

    def masked_score(self, tokens, premask):
        return self.value


class TestTrainNgram:
    def test_single_sentence_unigrams_are_relative_frequencies(self):
        model = train_ngram(["a b a"], order=1)
        # counting oracle: a:2, b:1, EOS:1 -> N=4; T1=3 types; uniform 1/4
        n, t1, uniform = 4, 3, 1 / (3 + 1)
        assert model.prob("a", ()) == pytest.approx((2 + t1 * uniform) / (n + t1))
        assert model.prob("b", ()) == pytest.approx((1 + t1 * uniform) / (n + t1))

    def test_probabilities_sum_to_one(self):
        corpus = [
            "the train leaves on january fourth",
            "one quarter cup of sugar",
            "the train is late",
            "on january first we rest",
        ]
        model = train_ngram(corpus, order=3)
        rng = random.Random(3)
        vocab_plus_unk = model.vocab + ["<unk>"]
        contexts = [()]
        words = [w for line in corpus for w in line.split()]
        for _ in range(100):
            k = rng.choice([1, 2])
            contexts.append(tuple(rng.choice(words + ["<s>", "oov"]) for _ in range(k)))
        for ctx in contexts:
            total = sum(model.prob(w, ctx) for w in vocab_plus_unk)
            assert total == pytest.approx(1.0, abs=1e-9), ctx

    def test_empty_corpus_rejected(self):
        with pytest.raises(ScorerError):
            train_ngram([], order=3)
        with pytest.raises(ScorerError):
            train_ngram(["", "   "], order=3)

    def test_deterministic_bytes(self, tmp_path):
        lines = ["the cat sat", "the dog ran", "a cat ran"]
        p1, p2 = tmp_path / "a.fnlm", tmp_path / "b.fnlm"
        train_ngram(lines, order=3).save(p1)
        train_ngram(list(lines), order=3).save(p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_save_load_round_trip(self, tmp_path):
        model = train_ngram(["the cat sat on the mat", "the dog sat"], order=3)
        path = tmp_path / "model.fnlm"
        model.save(path)
        loaded = NgramModel.load(path)
        held_out = ["the", "cat", "sat", "on", "a", "mat"]
        assert score_autoregressive(model, held_out) == score_autoregressive(loaded, held_out)

    def test_magic_checked(self, tmp_path):
        bad = tmp_path / "bad.fnlm"
        bad.write_bytes(b"NOTLM")
        from fusenorm.errors import DataFormatError

        with pytest.raises(DataFormatError):
            NgramModel.load(bad)


class TestScoreAutoregressive:
    def test_single_token_corpus_hand_derivation(self):
        # Witten-Bell by hand for corpus "hello": unigrams hello:1, EOS:1,
        # N=2, T1=2, uniform=1/3 -> P1(hello)=P1(EOS)=(1+2/3)/4=5/12; each
        # bigram/trigram level has count 1, total 1, one type:
        # P(x|ctx) = (1 + 5/12)/2 = 17/24, then (1 + 17/24)/2 = 41/48 for
        # both scored positions, so the score is -log(41/48).
        model = train_ngram(["hello"], order=3)
        got = score_autoregressive(model, ["hello"])
        assert got.value == pytest.approx(-math.log(41 / 48), abs=1e-12)

    def test_toy_corpus_ranking(self):
        corpus = ["on january fourth"] * 9 + ["one quarter cup"]
        model = train_ngram(corpus, order=3)
        frequent = score_autoregressive(model, ["on", "january", "fourth"])
        rare = score_autoregressive(model, ["on", "one", "quarter"])
        assert frequent.value < rare.value

    def test_deterministic(self):
        model = train_ngram(["a b c d e"], order=3)
        s1 = score_autoregressive(model, ["a", "b", "x"])
        s2 = score_autoregressive(model, ["a", "b", "x"])
        assert s1.value == s2.value

    def test_empty_rejected(self):
        model = train_ngram(["a b"], order=3)
        with pytest.raises(ScorerError):
            score_autoregressive(model, [])
        with pytest.raises(ScorerError):
            score_autoregressive(model, ["?", "!"])

    def test_perplexity_is_exp(self):
        model = train_ngram(["a b"], order=2)
        s = score_autoregressive(model, ["a", "b"])
        assert s.perplexity == pytest.approx(math.exp(s.value))


class TestMlmScoreVariant:
    def test_uniform_scorer_closed_form(self):
        scorer = UniformMaskedScorer(50)
        got = mlm_score_variant(scorer, ["a", "b", "c"], [])
        assert got.value == pytest.approx(math.log(50))

    def test_premask_forwarded(self):
        scorer = ProgrammedMaskedScorer({((1, 3),): 0.25})
        got = mlm_score_variant(scorer, ["w", "x", "y", "z"], [(1, 3)])
        assert got.value == 0.25
        assert scorer.calls == [(("w", "x", "y", "z"), ((1, 3),))]

    def test_all_masked_rejected(self):
        scorer = UniformMaskedScorer(10)
        with pytest.raises(ScorerError):
            mlm_score_variant(scorer, ["a", "b"], [(0, 2)])

    def test_bad_spans_rejected(self):
        scorer = UniformMaskedScorer(10)
        with pytest.raises(ValueError):
            mlm_score_variant(scorer, ["a", "b"], [(1, 5)])
        with pytest.raises(ValueError):
            mlm_score_variant(scorer, ["a", "b", "c"], [(0, 2), (1, 3)])


class TestMlmAggregate:
    def cups_request(self):
        # "What's one half cup plus two thirds cup ?" with two spans
        tokens = ("What's", "one", "half", "cup", "plus", "two", "thirds", "cup", "?")
        return ScoreRequest(tokens, ((1, 3), (5, 7)), MASKED)

    def test_two_span_variants(self):
        request = self.cups_request()
        scorer = ProgrammedMaskedScorer({((5, 7),): 0.4, ((1, 3),): 0.8})
        got = mlm_aggregate(scorer, request)
        assert got.value == pytest.approx(0.6, abs=1e-12)
        premasks = {c[1] for c in scorer.calls}
        assert premasks == {((5, 7),), ((1, 3),)}

    def test_mean_to_1e12(self):
        request = self.cups_request()
        scorer = ProgrammedMaskedScorer({((5, 7),): 0.123456789, ((1, 3),): 0.987654321})
        got = mlm_aggregate(scorer, request)
        assert abs(got.value - (0.123456789 + 0.987654321) / 2) < 1e-12

    def test_single_span_equals_variant(self):
        tokens = ("the", "train", "leaves", "on", "January", "fourth")
        request = ScoreRequest(tokens, ((4, 6),), MASKED)
        scorer = UniformMaskedScorer(123)
        agg = mlm_aggregate(scorer, request)
        var = mlm_score_variant(scorer, tokens, ())
        assert agg.value == var.value

    def test_no_spans_is_plain_pll(self):
        tokens = ("hello", "world")
        request = ScoreRequest(tokens, (), MASKED)
        scorer = UniformMaskedScorer(7)
        assert mlm_aggregate(scorer, request).value == pytest.approx(math.log(7))

    def test_linearity_random_values(self):
        rng = random.Random(9)
        tokens = tuple("abcdefgh")
        spans = ((0, 1), (2, 4), (5, 6))
        for _ in range(20):
            values = {}
            for keep in spans:
                premask = tuple(s for s in spans if s != keep)
                values[premask] = rng.uniform(-5, 5)
            scorer = ProgrammedMaskedScorer(values)
            got = mlm_aggregate(scorer, ScoreRequest(tokens, spans, MASKED))
            assert got.value == pytest.approx(sum(values.values()) / 3, abs=1e-12)


class TestSelectBest:
    def date_scorer(self):
        corpus = ["the train leaves on january fourth"] * 5 + ["add one quarter cup"]
        return train_ngram(corpus, order=3)

    def test_fig2_rescoring(self):
        cands = generate(build_lattice("The train leaves on 1/4", GRAMMAR))
        best = select_best(cands, self.date_scorer(), AUTOREGRESSIVE)
        assert best.candidate.text == "The train leaves on January fourth"

    def test_single_candidate(self):
        cands = generate(build_lattice("hello world", GRAMMAR))
        best = select_best(cands, self.date_scorer(), AUTOREGRESSIVE)
        assert best.candidate.text == "hello world"

    def test_tie_breaks_on_lattice_weight(self):
        cands = generate(build_lattice("The train leaves on 1/4", GRAMMAR))
        scorer = ConstantMaskedScorer(1.25)
        best = select_best(cands, scorer, MASKED)
        ticks = [c.weight.ticks for c in cands]
        assert best.candidate.weight.ticks == min(ticks)

    def test_argmin_invariant_under_constant_shift(self):
        cands = generate(build_lattice("What's 1/2 cup plus 2/3 cup?", GRAMMAR))
        model = train_ngram(
            ["what's one half cup plus two thirds cup"] * 3 + ["january second says hi"],
            order=3,
        )

        class Shifted:
            def __init__(self, base, delta):
                self.base, self.delta = base, delta

            def sequence_log_probs(self, tokens):
                return [lp - self.delta for lp in self.base.sequence_log_probs(tokens)]

        best0 = select_best(cands, model, AUTOREGRESSIVE)
        best9 = select_best(cands, Shifted(model, 9.0), AUTOREGRESSIVE)
        assert best0.candidate.text == best9.candidate.text

    def test_empty_list_rejected(self):
        with pytest.raises(ScorerError):
            select_best([], self.date_scorer(), AUTOREGRESSIVE)

    def test_all_scored_retained(self):
        cands = generate(build_lattice("The train leaves on 1/4", GRAMMAR))
        scored = score_candidates(cands, self.date_scorer(), AUTOREGRESSIVE)
        assert len(scored) == len(cands)
        assert [sc.candidate.text for sc in scored] == [c.text for c in cands]


class _MockHandler(http.server.BaseHTTPRequestHandler):
    behavior = "ok"
    seen = []

    def do_POST(self):
        body = json.loads(self.rfile.read(int(self.headers["Content-Length"])))
        type(self).seen.append(body)
        if self.behavior == "error":
            self.send_response(500)
            self.end_headers()
            return
        if self.behavior == "malformed":
            payload = {"scores": [0.1]}  # wrong length for multi-item batches
        else:
            payload = {
                "scores": [0.1 * (i + 1) for i in range(len(body["items"]))]
            }
        raw = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(raw)))
        self.end_headers()
        self.wfile.write(raw)

    def log_message(self, *args):
        pass


@pytest.fixture
def mock_server():
    handler = type("Handler", (_MockHandler,), {"behavior": "ok", "seen": []})
    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}", handler
    server.shutdown()


class TestRemoteScorer:
    def test_batch_order_preserved(self, mock_server):
        endpoint, _ = mock_server
        scorer = RemoteScorer(endpoint)
        items = [((f"tok{i}",), ()) for i in range(3)]
        scores = scorer.score_batch(items)
        assert scores == pytest.approx([0.1, 0.2, 0.3])

    def test_batching_limit(self, mock_server):
        endpoint, handler = mock_server
        scorer = RemoteScorer(endpoint, parallelism=2)
        items = [((f"tok{i}",), ()) for i in range(70)]
        scores = scorer.score_batch(items)
        assert len(scores) == 70
        sizes = [len(b["items"]) for b in handler.seen]
        assert sorted(sizes, reverse=True) == [32, 32, 6]

    def test_unreachable_endpoint_retries_with_backoff(self):
        scorer = RemoteScorer("http://127.0.0.1:9", timeout=0.5, retries=2, backoff=0.2)
        start = time.monotonic()
        with pytest.raises(ScorerError) as exc:
            scorer.masked_score(("a",), ())
        elapsed = time.monotonic() - start
        assert elapsed >= 0.2 + 0.4  # backoff schedule before attempts 2 and 3
        assert exc.value.batch

    def test_malformed_response_is_error(self, mock_server):
        endpoint, handler = mock_server
        handler.behavior = "malformed"
        scorer = RemoteScorer(endpoint, retries=0)
        with pytest.raises(ScorerError):
            scorer.score_batch([(("a",), ()), (("b",), ())])

    def test_server_error_retried_then_raises(self, mock_server):
        endpoint, handler = mock_server
        handler.behavior = "error"
        scorer = RemoteScorer(endpoint, retries=1, backoff=0.01)
        with pytest.raises(ScorerError):
            scorer.masked_score(("a",), ())
        assert len(handler.seen) == 2

    def test_select_best_follows_canned_ranking(self, mock_server):
        endpoint, _ = mock_server
        cands = generate(build_lattice("The train leaves on 1/4", GRAMMAR))
        scorer = RemoteScorer(endpoint)
        best = select_best(cands, scorer, MASKED)
        # canned scores ascend with request order, so the first candidate wins
        assert best.candidate.text == cands[0].text

    def test_remote_score_convenience(self, mock_server):
        endpoint, _ = mock_server
        reqs = [
            ScoreRequest(("a", "b"), (), MASKED),
            ScoreRequest(("c", "d"), ((0, 1),), MASKED),
        ]
        scores = remote_score(endpoint, reqs)
        assert scores == pytest.approx([0.1, 0.2])
