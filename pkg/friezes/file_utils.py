from typing import Dict
import os
import json

from friezes.errors import ParseError


def project_root():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def resources_dir() -> str:
    return os.path.join(project_root(), "friezes", "resources")


def results_root(results_dir: str = None) -> str:
    results_dir = "results_eval" if results_dir is None else results_dir
    if os.path.isabs(results_dir):
        return results_dir
    return os.path.join(project_root(), results_dir)


def dumps_canonical(data) -> str:
    """ Compact JSON with the key order of the given dicts and a trailing newline. """
    return json.dumps(data, ensure_ascii=False, separators=(",", ":")) + "\n"


def load_file(file_path: str, file_ending: str = None) -> str:
    if file_ending and not file_path.endswith(file_ending):
        file_path = file_path + file_ending
    try:
        with open(file_path, encoding='utf8') as f:
            data = f.read()
    except OSError as e:
        raise ParseError(f"Cannot read '{file_path}': {e.strerror}. Check the path and try again.") from e
    return data


def load_json(file_path: str) -> Dict:
    data = load_file(file_path)
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"'{file_path}' is not valid JSON: {e}") from e


def load_resource_json(file_name: str) -> Dict:
    return load_json(os.path.join(resources_dir(), file_name))


def store_file(data, file_name: str, dir_path: str, sub_dir: str = None, do_overwrite: bool = True) -> str:
    """
    :param data: to store; dicts and lists are written as canonical JSON when the file name ends with .json
    :param file_name: of the file to store
    :param dir_path: to the directory to store to
    :param sub_dir: optional subdirectories
    :param do_overwrite: default: True
    :return: the file path
    """
    if sub_dir:
        dir_path = os.path.join(dir_path, sub_dir)

    if dir_path and not os.path.exists(dir_path):
        os.makedirs(dir_path)

    fp = os.path.join(dir_path, file_name)
    if not do_overwrite:
        if os.path.exists(fp):
            raise FileExistsError(fp)

    with open(fp, "w", encoding='utf-8') as f:
        if file_name.endswith(".json") and not isinstance(data, str):
            f.write(dumps_canonical(data))
        else:
            f.write(data)
    return fp


def store_to(data, file_path: str) -> str:
    dir_path, file_name = os.path.split(os.path.abspath(file_path))
    return store_file(data, file_name, dir_path)
