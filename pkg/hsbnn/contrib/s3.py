# Copyright 2026 The hsbnn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed
# under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific
# language governing permissions and limitations under the License.

from typing import Iterator, Optional, Tuple

from hsbnn.exceptions import ConfigError

from .interface import AbstractCheckpointStore


class S3CheckpointStore(AbstractCheckpointStore):
    def __init__(
        self,
        client,
        bucket_name: str,
        prefix: str = "",
        page_size: Optional[int] = 1000,
    ) -> None:
        self._client = client
        self._bucket_name = bucket_name
        self._prefix = prefix.strip("/") + "/" if prefix.strip("/") else ""
        self._page_size = page_size

    def _key(self, name: str) -> str:
        return self._prefix + name

    def put(self, name: str, data: bytes) -> None:
        self._client.put_object(
            Bucket=self._bucket_name, Key=self._key(name), Body=data
        )

    def get(self, name: str) -> Optional[bytes]:
        try:
            response = self._client.get_object(
                Bucket=self._bucket_name, Key=self._key(name)
            )
        except self._client.exceptions.NoSuchKey:
            return None
        return response["Body"].read()

    def delete(self, name: str) -> None:
        self._client.delete_object(Bucket=self._bucket_name, Key=self._key(name))

    def list(self, limit: Optional[int] = None, offset: int = 0) -> Iterator[str]:
        visited = 0

        for key in self._list_object_keys():
            visited += 1

            if self._has_not_exceeded_list_offset(visited, offset):
                continue
            if self._has_reached_end_of_list(limit, offset, visited):
                return

            yield key[len(self._prefix):]

    def _list_object_keys(self) -> Iterator[str]:
        paginator = self._client.get_paginator("list_objects_v2")
        config = {"PageSize": self._page_size} if self._page_size else {}

        for page in paginator.paginate(
            Bucket=self._bucket_name, Prefix=self._prefix, PaginationConfig=config
        ):
            for content in page.get("Contents", []):
                yield content["Key"]

    def _has_not_exceeded_list_offset(self, visited: int, offset: int) -> bool:
        return visited <= offset

    def _has_reached_end_of_list(
        self, limit: Optional[int], offset: int, visited: int
    ) -> bool:
        return limit is not None and visited > limit + offset


def parse_s3_url(url: str) -> Tuple[str, str]:
    if not url.startswith("s3://"):
        raise ConfigError("not an s3 url: %s" % url)
    bucket, _, prefix = url[len("s3://"):].partition("/")
    if not bucket:
        raise ConfigError("s3 url without a bucket: %s" % url)
    return bucket, prefix
