import pytest

from bridgeref.cli import main
from bridgeref.data import DEMO_CORPUS, LEXICON_DIR

LEX = str(LEXICON_DIR)
CORPUS = str(DEMO_CORPUS)


def test_resolve_writes_predictions(tmp_path, capsys):
    out = tmp_path / "preds.tsv"
    assert main(["resolve", "--corpus", CORPUS, "--lexicons", LEX,
                 "--out", str(out)]) == 0
    lines = [l for l in out.read_text().splitlines() if not l.startswith("%")]
    assert "rate\t8\t-\t7\t25" in lines
    assert "analysis\t9\tga\t3\t21" in lines
    assert "analysis\t9\two\t5\t18" in lines
    assert "rain\t1\t-\tNONE\t10" in lines


def test_resolve_to_stdout(capsys):
    assert main(["resolve", "--corpus", CORPUS, "--lexicons", LEX]) == 0
    assert "rate\t8\t-\t7\t25" in capsys.readouterr().out


def test_resolve_no_semantics(capsys):
    assert main(["resolve", "--corpus", CORPUS, "--lexicons", LEX,
                 "--no-semantics"]) == 0
    out = capsys.readouterr().out
    assert "rate\t8\t-\t7\t18" in out


def test_eval_round_trip(tmp_path, capsys):
    out = tmp_path / "preds.tsv"
    main(["resolve", "--corpus", CORPUS, "--lexicons", LEX, "--out", str(out)])
    assert main(["eval", "--corpus", CORPUS, "--predictions", str(out)]) == 0
    report = capsys.readouterr().out
    assert "total       100% (6/6)      100% (6/6)" in report
    assert "once per case slot" in report


def test_explain_outputs_score_tables(capsys):
    assert main(["explain", "--corpus", CORPUS, "--lexicons", LEX,
                 "--anaphor", "rate:8"]) == 0
    out = capsys.readouterr().out
    assert "Total Score" in out
    assert "nisidoku" in out


def test_explain_verbal_noun_prints_one_table_per_slot(capsys):
    assert main(["explain", "--corpus", CORPUS, "--lexicons", LEX,
                 "--anaphor", "analysis:9"]) == 0
    out = capsys.readouterr().out
    assert "[ga slot]" in out and "[wo slot]" in out


def test_explain_non_target_is_a_data_error(capsys):
    assert main(["explain", "--corpus", CORPUS, "--lexicons", LEX,
                 "--anaphor", "rate:2"]) == 1
    assert "not an anaphora target" in capsys.readouterr().err


def test_missing_corpus_file_is_a_data_error(capsys):
    assert main(["resolve", "--corpus", "/nonexistent.adc",
                 "--lexicons", LEX]) == 1


def test_bad_config_is_a_config_error(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("sim.0=99\n", encoding="utf-8")   # breaks monotonicity
    assert main(["resolve", "--corpus", CORPUS, "--lexicons", LEX,
                 "--config", str(config)]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_config_overrides_apply(tmp_path, capsys):
    config = tmp_path / "tweak.cfg"
    config.write_text("indefinite=-3\n", encoding="utf-8")
    assert main(["resolve", "--corpus", CORPUS, "--lexicons", LEX,
                 "--config", str(config)]) == 0
    out = capsys.readouterr().out
    assert "rate\t8\t-\t7\t27" in out   # every weighted total shifts by +2


def test_build_dict_with_merge(tmp_path, capsys):
    lex = LEXICON_DIR
    assert main(["build-dict",
                 "--xnoy", str(lex / "xnoy.tsv"),
                 "--thesaurus", str(lex / "thesaurus.tsv"),
                 "--attrs", str(lex / "nounattrs.tsv"),
                 "--merge", "genshu:kokumin"]) == 0
    out = capsys.readouterr().out
    assert "Y kokumin" in out
    assert "merged-from:kokumin" in out
    assert "rejected: hontou" in out


def test_build_dict_bad_merge_argument(capsys):
    lex = LEXICON_DIR
    assert main(["build-dict",
                 "--xnoy", str(lex / "xnoy.tsv"),
                 "--thesaurus", str(lex / "thesaurus.tsv"),
                 "--attrs", str(lex / "nounattrs.tsv"),
                 "--merge", "nonsense"]) == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["resolve"])          # missing required arguments
    assert excinfo.value.code == 2
