import io
import json

import pytest

from mayeksyl.cli import main
from mayeksyl.script import ANAP, APUN, CHEIKHEI, KOK, PA, RAI, UN

LEMON_LINE = f"{PA}{ANAP}{PA}{ANAP} {UN}{CHEIKHEI}"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_segment_plain(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(LEMON_LINE + "\n" + UN + "\n", encoding="utf-8")
    code, out, err = run(["segment", "-i", str(src)], capsys)
    assert code == 0
    assert out == f"{PA}{ANAP}/{PA}{ANAP} {UN} {CHEIKHEI}\n{UN}\n"
    assert err == ""


def test_segment_monosyllable_has_no_delimiter(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(UN + "\n", encoding="utf-8")
    code, out, _ = run(["segment", "-i", str(src)], capsys)
    assert code == 0
    assert out == UN + "\n"


def test_segment_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(PA + ANAP + PA + ANAP + "\n"))
    code, out, _ = run(["segment", "-i", "-"], capsys)
    assert code == 0
    assert out == f"{PA}{ANAP}/{PA}{ANAP}\n"


def test_segment_json(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(PA + APUN + RAI + ANAP + "\n", encoding="utf-8")
    code, out, _ = run(["segment", "-i", str(src), "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "segmented"
    assert payload["patterns"] == ["CCV"]


def test_segment_tsv(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(UN + "\n", encoding="utf-8")
    code, out, _ = run(["segment", "-i", str(src), "--format", "tsv"], capsys)
    assert code == 0
    assert out == f"{UN}\tsegmented\t{UN}\tV\n"


def test_segment_deterministic(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(LEMON_LINE + "\n", encoding="utf-8")
    _, first, _ = run(["segment", "-i", str(src)], capsys)
    _, second, _ = run(["segment", "-i", str(src)], capsys)
    assert first == second


def test_missing_input_is_data_error(tmp_path, capsys):
    code, out, err = run(["segment", "-i", str(tmp_path / "absent.txt")], capsys)
    assert code == 2
    assert "cannot read input" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["segment", "--format", "yaml"])
    assert exc.value.code == 1


def test_unknown_command_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_meetei_delimiter_rejected(tmp_path):
    src = tmp_path / "in.txt"
    src.write_text(UN + "\n", encoding="utf-8")
    with pytest.raises(SystemExit) as exc:
        main(["segment", "-i", str(src), "--delimiter", KOK])
    assert exc.value.code == 1


def test_eval_perfect_on_own_output(tmp_path, capsys):
    gold = tmp_path / "gold.tsv"
    gold.write_text(
        f"{PA}{ANAP}{PA}{ANAP}\t{PA}{ANAP}/{PA}{ANAP}\n{UN}\t{UN}\n",
        encoding="utf-8",
    )
    code, out, _ = run(["eval", "--gold", str(gold)], capsys)
    assert code == 0
    assert "precision: 100.00%" in out
    assert "recall:    100.00%" in out
    assert "f-score:   100.00%" in out


def test_eval_merged_boundaries_hand_computed(tmp_path, capsys):
    # gold splits a fallback-free word the segmenter merges differently:
    # the two-syllable word scores zero of its own two; overall hand
    # computation: correct=2, system=3, gold=4
    gold = tmp_path / "gold.tsv"
    gold.write_text(
        f"{PA}{ANAP}{UN}\t{PA}{ANAP}/{UN}\n"      # system: one CVV syllable
        f"{PA}{ANAP}{PA}{ANAP}\t{PA}{ANAP}/{PA}{ANAP}\n",
        encoding="utf-8",
    )
    code, out, _ = run(["eval", "--gold", str(gold), "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert (payload["correct"], payload["system"], payload["gold"]) == (2, 3, 4)
    assert payload["precision"] == pytest.approx(100 * 2 / 3)
    assert payload["recall"] == pytest.approx(50.0)
    assert payload["f_score"] == pytest.approx(100 * 2 * (2 / 3) * 0.5 / (2 / 3 + 0.5))


def test_eval_bad_gold_is_data_error(tmp_path, capsys):
    gold = tmp_path / "gold.tsv"
    gold.write_text("garbage line\n", encoding="utf-8")
    code, _, err = run(["eval", "--gold", str(gold)], capsys)
    assert code == 2
    assert "line 1" in err


def test_eval_requires_gold():
    with pytest.raises(SystemExit) as exc:
        main(["eval"])
    assert exc.value.code == 1


def test_patterns_table(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(UN + "\n" + PA + ANAP + "\n" + ANAP + ANAP + "\n", encoding="utf-8")
    code, out, _ = run(["patterns", "-i", str(src)], capsys)
    assert code == 0
    lines = dict(line.split("\t") for line in out.splitlines())
    assert lines["V"] == "1"
    assert lines["CV"] == "1"
    assert lines["unsegmented"] == "1"
    assert list(lines)[0] == "V"  # fixed order, listing order first


def test_segment_pipeline_is_lossless(tmp_path, capsys):
    # stripping the delimiter from segmented output recovers each word token
    import random

    import wordgen
    from mayeksyl.corpus_io import TokenKind, tokenize

    rng = random.Random(41)
    lines = []
    for _ in range(20):
        parts = [wordgen.random_word(rng, rng.randint(1, 4))[0] for _ in range(rng.randint(1, 4))]
        lines.append(" ".join(parts))
    src = tmp_path / "in.txt"
    src.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, out, _ = run(["segment", "-i", str(src)], capsys)
    assert code == 0
    for line, rendered in zip(lines, out.splitlines()):
        original_words = [t.text for t in tokenize(line) if t.kind is TokenKind.WORD]
        recovered = [piece.replace("/", "") for piece in rendered.split(" ")]
        assert recovered == original_words


def test_inspect_stable_dump(capsys):
    code, first, _ = run(["inspect"], capsys)
    assert code == 0
    code, second, _ = run(["inspect"], capsys)
    assert first == second
    lines = first.splitlines()
    assert len(lines) == 56
    assert lines[0] == "U+ABC0\tmajor-letter\tkok\tk"
    assert lines[-1] == "U+ABF9\tdigit\tso(tara)\t9"


def test_inspect_json(capsys):
    code, out, _ = run(["inspect", "--format", "json"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 56
    assert rows[0]["codepoint"] == "U+ABC0"
