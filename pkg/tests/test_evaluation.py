import random

import pytest

from fusenorm.errors import DataFormatError
from fusenorm.evaluation import (
    EquivRule,
    ParallelExample,
    canonicalize,
    evaluate,
    format_google_tn_rows,
    load_equiv_rules,
    load_google_tn,
    read_google_tn_rows,
)

RULES = load_equiv_rules()


class TestCanonicalize:
    def test_date_formats_equivalent(self):
        a = canonicalize("the fifth of November two thousand twenty", RULES)
        b = canonicalize("November fifth twenty twenty", RULES)
        assert a == b == "november fifth twenty twenty"

    def test_year_readings_equivalent(self):
        a = canonicalize("born in one thousand nine hundred seventy", RULES)
        b = canonicalize("born in nineteen seventy", RULES)
        assert a == b

    def test_oh_vs_zero_in_years(self):
        a = canonicalize("nineteen oh five", RULES)
        b = canonicalize("one thousand nine hundred five", RULES)
        assert a == b == "nineteen zero five"

    def test_titles(self):
        assert canonicalize("Misses Pegler.", RULES) == "misses pegler"
        assert canonicalize("Mrs Pegler", RULES) == "misses pegler"
        assert canonicalize("exclaimed Mr. Jones!", RULES) == "exclaimed mister jones"

    def test_empty(self):
        assert canonicalize("", RULES) == ""

    def test_punctuation_and_case_stripped(self):
        assert canonicalize("Hello, World!", RULES) == "hello world"

    def test_idempotent(self):
        samples = [
            "the fifth of November two thousand twenty",
            "Mr. Smith met Mrs. Jones on the fourth of July",
            "w e a r e s c dot com",
            "nineteen oh five and two thousand five",
            "",
        ]
        for s in samples:
            once = canonicalize(s, RULES)
            assert canonicalize(once, RULES) == once

    def test_fourteen_never_merges_with_fourth(self):
        assert canonicalize("fourteen", RULES) != canonicalize("fourth", RULES)
        assert canonicalize("one fourteenth", RULES) != canonicalize("one fourth", RULES)

    def test_rule_order_confluent(self):
        samples = [
            "the fifth of November two thousand twenty",
            "on the first of May one thousand nine hundred seventy",
            "nineteen oh five happened before two thousand five",
            "Mrs Pegler left on July the fourth",
        ]
        rng = random.Random(17)
        for s in samples:
            expected = canonicalize(s, RULES)
            for _ in range(10):
                shuffled = RULES[:]
                rng.shuffle(shuffled)
                assert canonicalize(s, shuffled) == expected

    def test_rules_are_data_driven(self):
        only_titles = [EquivRule(("mr",), ("mister",))]
        assert canonicalize("Mr. Big", only_titles) == "mister big"
        # without the date rule the formats stay distinct
        a = canonicalize("the fifth of November", only_titles)
        b = canonicalize("November fifth", only_titles)
        assert a != b


class TestEvaluate:
    def test_identity_is_perfect(self):
        hyps = ["hello world", "January fourth", "w e dot com"]
        report = evaluate(hyps, list(hyps), RULES)
        assert report.accuracy == 100.0
        assert report.correct == report.total == 3
        assert not report.errors

    def test_date_pair_counts_correct(self):
        report = evaluate(
            ["the fifth of November two thousand twenty"],
            ["November fifth twenty twenty"],
            RULES,
        )
        assert report.correct == 1

    def test_length_mismatch_rejected(self):
        with pytest.raises(DataFormatError):
            evaluate(["a"], ["a", "b"], RULES)

    def test_accuracy_arithmetic(self):
        hyps = ["same"] * 218 + ["different"] * 13
        refs = ["same"] * 218 + ["reference"] * 13
        report = evaluate(hyps, refs, RULES)
        assert report.total == 231
        assert report.correct == 218
        assert report.accuracy == pytest.approx(100 * 218 / 231, abs=1e-9)
        assert f"{report.accuracy:.2f}" == "94.37"

    def test_buckets(self):
        cases = [
            # hypothesis, reference, written, expected bucket
            ("Number one hundred thousand one", "Number ten thousand one", "Number 10001",
             "NUMBER"),
            ("seventy five F", "seventy five degrees Fahrenheit", "75F", "UNKNOWN_FORMAT"),
            ("m r e Pegler", "Misses Pegler", "Mrs. Pegler", "HALLUCINATION"),
            ("w e a r e s c dot com", "we are s c dot com", "WeAreSC.com", "URL_SPLITTING"),
            ("one quarter", "January fourth", "1/4", "CLASS_AMBIGUITY"),
            ("the train", "the late train", "the late train", "OMISSION"),
            ("it vanished utterly", "it vanished", "it vanished", "HALLUCINATION"),
        ]
        for hyp, ref, written, expected in cases:
            report = evaluate([hyp], [ref], RULES, writtens=[written])
            assert report.errors, (hyp, ref)
            assert report.errors[0].bucket == expected, (hyp, ref, report.errors[0].bucket)

    def test_json_report(self):
        import json

        report = evaluate(["a b"], ["a c"], RULES)
        data = json.loads(report.to_json())
        assert data["total"] == 1
        assert data["correct"] == 0
        assert data["errors"][0]["bucket"]


FIXTURE = """\
PLAIN\tThe\t<self>
PLAIN\ttrain\t<self>
PLAIN\tleaves\t<self>
PLAIN\ton\t<self>
DATE\t1/4\tjanuary fourth
PUNCT\t.\tsil
<eos>\t<eos>
PLAIN\thello\t<self>
PLAIN\tworld\t<self>
<eos>\t<eos>
"""


class TestGoogleTnLoader:
    def test_small_file(self, tmp_path):
        path = tmp_path / "tn.tsv"
        path.write_text(FIXTURE, encoding="utf-8")
        examples = load_google_tn(path)
        assert len(examples) == 2
        assert examples[0].written == "The train leaves on 1/4."
        assert examples[0].spoken == "The train leaves on january fourth."
        assert examples[1].written == "hello world"

    def test_three_token_sentence(self, tmp_path):
        path = tmp_path / "small.tsv"
        path.write_text(
            "PLAIN\ta\t<self>\nPLAIN\tb\t<self>\nPLAIN\tc\t<self>\n<eos>\t<eos>\n",
            encoding="utf-8",
        )
        examples = load_google_tn(path)
        assert len(examples) == 1
        assert examples[0].written == "a b c"

    def test_round_trip_byte_for_byte(self, tmp_path):
        path = tmp_path / "tn.tsv"
        path.write_text(FIXTURE, encoding="utf-8")
        rows = read_google_tn_rows(path)
        assert format_google_tn_rows(rows) == FIXTURE

    def test_malformed_line_reports_number(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("PLAIN\ta\t<self>\nbroken line\n", encoding="utf-8")
        with pytest.raises(DataFormatError) as exc:
            read_google_tn_rows(path)
        assert ":2:" in str(exc.value)

    def test_parallel_example_validation(self):
        with pytest.raises(ValueError):
            ParallelExample(written="", spoken="x")
