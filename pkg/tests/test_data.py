import json

import numpy as np
import pytest
from fastcore.test import test_eq, test_fail

from cjm_hybrid_alignment.data.records import (ifa_tokens, iter_jsonl, load_records, preference_tokens,
                                               record_from_dict, records_hash, write_records)
from cjm_hybrid_alignment.data.synth import ALPHABET, apply_task, corrupt, synth_task_generate
from cjm_hybrid_alignment.data.tokenizer import (BOS_ID, EOS_ID, VOCAB_SIZE, decode_response, detokenize,
                                                 encode_prompt, encode_response, tokenize)
from cjm_hybrid_alignment.errors import RecordError
from cjm_hybrid_alignment.models import PreferenceRecord, PromptResponseRecord


def test_tokenizer_round_trip():
    text = "héllo, wörld ✓"
    ids = tokenize(text)
    test_eq(len(ids), len(text.encode("utf-8")))
    assert all(3 <= i < VOCAB_SIZE for i in ids)
    test_eq(detokenize(ids).decode("utf-8"), text)
    test_eq(tokenize(b"\x00\xff"), [3, 258])


def test_specials_and_framing():
    test_eq(encode_prompt("ab"), [BOS_ID, 100, 101])
    test_eq(encode_response("ab"), [100, 101, EOS_ID])
    test_eq(detokenize([BOS_ID, 100, EOS_ID]), b"a")
    test_fail(lambda: detokenize([BOS_ID, 100], keep_specials=True), contains="special id")
    test_fail(lambda: detokenize([VOCAB_SIZE]), contains="outside vocabulary")
    test_eq(decode_response([100, 101, EOS_ID, 102]), "ab")
    test_eq(decode_response([100, 101]), "ab")
    test_eq(decode_response([3 + 0xC3]), "�")


def test_record_invariants():
    test_fail(lambda: PromptResponseRecord("", "x"), contains="nonempty")
    test_fail(lambda: PreferenceRecord("p", "same", "same"), contains="must differ")
    test_fail(lambda: record_from_dict({"prompt": "p", "response": "r", "extra": "e"}, "ifa"), contains="wrong field set")
    test_fail(lambda: record_from_dict({"prompt": "p", "response": 3}, "ifa"), contains="strings")
    test_fail(lambda: record_from_dict({"prompt": "p"}, "judgment"), contains="unknown record kind")
    rec = record_from_dict({"prompt": "p", "chosen": "a", "rejected": "b"}, "hpa")
    test_eq(rec, PreferenceRecord("p", "a", "b"))


def test_load_records(tmp_path):
    path = tmp_path / "ifa.jsonl"
    path.write_bytes(b'{"prompt": "abc", "response": "cba"}\r\n\r\n{"prompt": "xy", "response": "yx"}\n')
    test_eq(load_records(path, "ifa"), [PromptResponseRecord("abc", "cba"), PromptResponseRecord("xy", "yx")])
    test_eq([n for n, _ in iter_jsonl(path)], [1, 3])


def test_malformed_files_name_the_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"prompt": "a", "chosen": "b", "rejected": "c"}\n{"prompt": "a", "chosen": "b"\n', encoding="utf-8")
    test_fail(lambda: load_records(path, "preference"), contains="bad.jsonl:2")
    path.write_text('{"prompt": "a", "chosen": "b", "rejected": "c"}\n{"prompt": "a", "chosen": "b"}\n', encoding="utf-8")
    test_fail(lambda: load_records(path, "preference"), contains="bad.jsonl:2: wrong field set")
    path.write_text('["not", "an", "object"]\n', encoding="utf-8")
    test_fail(lambda: load_records(path, "preference"), contains="flat object")
    test_fail(lambda: load_records(tmp_path / "missing.jsonl", "ifa"), contains="file not found")


def test_invalid_utf8_names_the_line(tmp_path):
    path = tmp_path / "latin.jsonl"
    path.write_bytes(b'{"prompt": "ab", "response": "ba"}\n{"prompt": "\xff\xfe", "response": "x"}\n')
    test_fail(lambda: load_records(path, "ifa"), contains="latin.jsonl:2: invalid UTF-8")
    with pytest.raises(RecordError):
        list(iter_jsonl(path))


def test_write_records_round_trip(tmp_path):
    records = [PreferenceRecord("p1", "a", "b"), PreferenceRecord("p2", "ü", "u")]
    path = write_records(records, tmp_path / "prefs.jsonl")
    test_eq(load_records(path, "preference"), records)
    test_eq(json.loads(path.read_text(encoding="utf-8").splitlines()[1]), {"chosen": "ü", "prompt": "p2", "rejected": "u"})
    test_eq(records_hash(records), records_hash(list(records)))
    assert records_hash(records) != records_hash(records[:1])


def test_token_views():
    x, y = ifa_tokens(PromptResponseRecord("ab", "ba"))
    test_eq(x, [BOS_ID, 100, 101])
    test_eq(y, [101, 100, EOS_ID])
    x, yw, yl = preference_tokens(PreferenceRecord("a", "b", "c"))
    test_eq((x, yw, yl), ([BOS_ID, 100], [101, EOS_ID], [102, EOS_ID]))


def test_synthetic_tasks():
    test_eq(apply_task("reverse", "abc"), "cba")
    test_eq(apply_task("sort", "cab"), "abc")
    test_eq(apply_task("copy", "cab"), "cab")
    test_fail(lambda: apply_task("shout", "x"), contains="unknown synthetic task")
    rng = np.random.default_rng(0)
    for gold in ("a", "ab", "abcdef", "aaaa"):
        for _ in range(50):
            out = corrupt(gold, rng)
            assert out != gold and len(out) == len(gold)
            assert set(out) <= set(ALPHABET)


@pytest.mark.parametrize("task", ["copy", "reverse", "sort"])
def test_synth_generate_is_seeded(task):
    ifa, prefs = synth_task_generate(3, 20, task)
    again = synth_task_generate(3, 20, task)
    test_eq((ifa, prefs), again)
    test_eq(len(ifa), 20)
    test_eq(len(prefs), 20)
    for r in ifa:
        test_eq(r.response, apply_task(task, r.prompt))
        assert 3 <= len(r.prompt) <= 8
    for p in prefs:
        test_eq(p.chosen, apply_task(task, p.prompt))
        assert p.rejected != p.chosen
    assert synth_task_generate(4, 20, task) != (ifa, prefs)
    test_fail(lambda: synth_task_generate(3, 0), contains="size")
