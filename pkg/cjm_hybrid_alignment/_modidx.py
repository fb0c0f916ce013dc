# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/cjm-hybrid-alignment',
                'doc_host': 'https://cj-mills.github.io',
                'git_url': 'https://github.com/cj-mills/cjm-hybrid-alignment',
                'lib_path': 'cjm_hybrid_alignment'},
  'syms': { 'cjm_hybrid_alignment.cli': { 'cjm_hybrid_alignment.cli.Datasets': ('cli.html#datasets', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli.Datasets.hashes': ('cli.html#datasets.hashes', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._hold_out': ('cli.html#_hold_out', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli.load_datasets': ('cli.html#load_datasets', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._policy': ('cli.html#_policy', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._reward_model': ('cli.html#_reward_model', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._validation_row': ('cli.html#_validation_row', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._finish_phase': ('cli.html#_finish_phase', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._stage_sft': ('cli.html#_stage_sft', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._preference_stage': ('cli.html#_preference_stage', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._stage_rm_train': ('cli.html#_stage_rm_train', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._stage_hbat': ('cli.html#_stage_hbat', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._exact_match_win_rate': ('cli.html#_exact_match_win_rate', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._stage_eval': ('cli.html#_stage_eval', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli._write_manifest': ('cli.html#_write_manifest', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli.run_stage': ('cli.html#run_stage', 'cjm_hybrid_alignment/cli.py'),
                'cjm_hybrid_alignment.cli.hbat': ('cli.html#hbat', 'cjm_hybrid_alignment/cli.py')},
            'cjm_hybrid_alignment.config': { 'cjm_hybrid_alignment.config._get': ('config.html#_get', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.config_to_flat': ('config.html#config_to_flat', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config._coerce': ('config.html#_coerce', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config._make': ('config.html#_make', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.flat_to_config': ('config.html#flat_to_config', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config._apply': ('config.html#_apply', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.parse_overrides': ('config.html#parse_overrides', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.load_config': ('config.html#load_config', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.dump_config': ('config.html#dump_config', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.validate_paths': ('config.html#validate_paths', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.resolve_run_dir': ('config.html#resolve_run_dir', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.RunLock': ('config.html#runlock', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.RunLock.__init__': ('config.html#runlock.__init__', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.RunLock.__enter__': ('config.html#runlock.__enter__', 'cjm_hybrid_alignment/config.py'),
                'cjm_hybrid_alignment.config.RunLock.__exit__': ('config.html#runlock.__exit__', 'cjm_hybrid_alignment/config.py')},
            'cjm_hybrid_alignment.core.checkpoint': { 'cjm_hybrid_alignment.core.checkpoint.encode_container': ('core/checkpoint.html#encode_container', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.write_container': ('core/checkpoint.html#write_container', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.read_container': ('core/checkpoint.html#read_container', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.label_to_dict': ('core/checkpoint.html#label_to_dict', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.label_from_dict': ('core/checkpoint.html#label_from_dict', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.save_checkpoint': ('core/checkpoint.html#save_checkpoint', 'cjm_hybrid_alignment/core/checkpoint.py'),
                'cjm_hybrid_alignment.core.checkpoint.load_checkpoint': ('core/checkpoint.html#load_checkpoint', 'cjm_hybrid_alignment/core/checkpoint.py')},
            'cjm_hybrid_alignment.core.importance': { 'cjm_hybrid_alignment.core.importance.Snapshot': ('core/importance.html#snapshot', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.capture': ('core/importance.html#snapshot.capture', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.from_checkpoint': ('core/importance.html#snapshot.from_checkpoint', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.save': ('core/importance.html#snapshot.save', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.names': ('core/importance.html#snapshot.names', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.__getitem__': ('core/importance.html#snapshot.__getitem__', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.Snapshot.__contains__': ('core/importance.html#snapshot.__contains__', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance._as_arrays': ('core/importance.html#_as_arrays', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.unit_change': ('core/importance.html#unit_change', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger': ('core/importance.html#importanceledger', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.__init__': ('core/importance.html#importanceledger.__init__', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.__repr__': ('core/importance.html#importanceledger.__repr__', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.count': ('core/importance.html#importanceledger.count', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.replay_ac': ('core/importance.html#importanceledger.replay_ac', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.update_F': ('core/importance.html#importanceledger.update_f', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.save': ('core/importance.html#importanceledger.save', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.ImportanceLedger.load': ('core/importance.html#importanceledger.load', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.accumulate': ('core/importance.html#accumulate', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.compute_F': ('core/importance.html#compute_f', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.fisher_diagonal': ('core/importance.html#fisher_diagonal', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.accumulate_fisher': ('core/importance.html#accumulate_fisher', 'cjm_hybrid_alignment/core/importance.py'),
                'cjm_hybrid_alignment.core.importance.freeze_mask': ('core/importance.html#freeze_mask', 'cjm_hybrid_alignment/core/importance.py')},
            'cjm_hybrid_alignment.core.losses': { 'cjm_hybrid_alignment.core.losses.mean_of': ('core/losses.html#mean_of', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses._distinct': ('core/losses.html#_distinct', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses._reference_logprob': ('core/losses.html#_reference_logprob', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.mle_loss': ('core/losses.html#mle_loss', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.ranking_loss': ('core/losses.html#ranking_loss', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.ppo_loss': ('core/losses.html#ppo_loss', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.dpo_margin': ('core/losses.html#dpo_margin', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.dpo_loss': ('core/losses.html#dpo_loss', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.ewc_penalty': ('core/losses.html#ewc_penalty', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.hpa_loss': ('core/losses.html#hpa_loss', 'cjm_hybrid_alignment/core/losses.py'),
                'cjm_hybrid_alignment.core.losses.ifa_loss': ('core/losses.html#ifa_loss', 'cjm_hybrid_alignment/core/losses.py')},
            'cjm_hybrid_alignment.core.model': { 'cjm_hybrid_alignment.core.model.ParameterUnit': ('core/model.html#parameterunit', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterUnit.n_neurons': ('core/model.html#parameterunit.n_neurons', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet': ('core/model.html#parameterset', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__init__': ('core/model.html#parameterset.__init__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__getitem__': ('core/model.html#parameterset.__getitem__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__contains__': ('core/model.html#parameterset.__contains__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__iter__': ('core/model.html#parameterset.__iter__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__len__': ('core/model.html#parameterset.__len__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.__repr__': ('core/model.html#parameterset.__repr__', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.names': ('core/model.html#parameterset.names', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.units': ('core/model.html#parameterset.units', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.total_size': ('core/model.html#parameterset.total_size', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.tensors': ('core/model.html#parameterset.tensors', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.arrays': ('core/model.html#parameterset.arrays', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.check_finite': ('core/model.html#parameterset.check_finite', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.copy': ('core/model.html#parameterset.copy', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.with_arrays': ('core/model.html#parameterset.with_arrays', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.ParameterSet.assign_': ('core/model.html#parameterset.assign_', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model._normal': ('core/model.html#_normal', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.init_lm_params': ('core/model.html#init_lm_params', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.init_scalar_model': ('core/model.html#init_scalar_model', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model._check_tokens': ('core/model.html#_check_tokens', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model._causal_mask': ('core/model.html#_causal_mask', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model._attention': ('core/model.html#_attention', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.backbone_forward': ('core/model.html#backbone_forward', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.lm_forward': ('core/model.html#lm_forward', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.token_logprobs': ('core/model.html#token_logprobs', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.sequence_logprob': ('core/model.html#sequence_logprob', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.nucleus_distribution': ('core/model.html#nucleus_distribution', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.sample_token': ('core/model.html#sample_token', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.generate': ('core/model.html#generate', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model._scalar_head': ('core/model.html#_scalar_head', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.reward_forward': ('core/model.html#reward_forward', 'cjm_hybrid_alignment/core/model.py'),
                'cjm_hybrid_alignment.core.model.value_forward': ('core/model.html#value_forward', 'cjm_hybrid_alignment/core/model.py')},
            'cjm_hybrid_alignment.core.optim': { 'cjm_hybrid_alignment.core.optim.MomentumSGD': ('core/optim.html#momentumsgd', 'cjm_hybrid_alignment/core/optim.py'),
                'cjm_hybrid_alignment.core.optim.MomentumSGD.__init__': ('core/optim.html#momentumsgd.__init__', 'cjm_hybrid_alignment/core/optim.py'),
                'cjm_hybrid_alignment.core.optim.MomentumSGD.reset': ('core/optim.html#momentumsgd.reset', 'cjm_hybrid_alignment/core/optim.py'),
                'cjm_hybrid_alignment.core.optim.MomentumSGD.grad_norm': ('core/optim.html#momentumsgd.grad_norm', 'cjm_hybrid_alignment/core/optim.py'),
                'cjm_hybrid_alignment.core.optim.MomentumSGD.step': ('core/optim.html#momentumsgd.step', 'cjm_hybrid_alignment/core/optim.py')},
            'cjm_hybrid_alignment.core.tensor': { 'cjm_hybrid_alignment.core.tensor.Primitive': ('core/tensor.html#primitive', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._register': ('core/tensor.html#_register', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._unbroadcast': ('core/tensor.html#_unbroadcast', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._broadcast_check': ('core/tensor.html#_broadcast_check', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._expand_reduced': ('core/tensor.html#_expand_reduced', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._add_fwd': ('core/tensor.html#_add_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._sub_fwd': ('core/tensor.html#_sub_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._mul_fwd': ('core/tensor.html#_mul_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._log_fwd': ('core/tensor.html#_log_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._sigmoid': ('core/tensor.html#_sigmoid', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._gelu_fwd': ('core/tensor.html#_gelu_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._gelu_bwd': ('core/tensor.html#_gelu_bwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._matmul_fwd': ('core/tensor.html#_matmul_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._mean_bwd': ('core/tensor.html#_mean_bwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._softmax_fwd': ('core/tensor.html#_softmax_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._log_softmax_fwd': ('core/tensor.html#_log_softmax_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._embedding_fwd': ('core/tensor.html#_embedding_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._scatter_bwd': ('core/tensor.html#_scatter_bwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._index_select_fwd': ('core/tensor.html#_index_select_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._concat_fwd': ('core/tensor.html#_concat_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._concat_bwd': ('core/tensor.html#_concat_bwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._reshape_fwd': ('core/tensor.html#_reshape_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._transpose_fwd': ('core/tensor.html#_transpose_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._layer_norm_fwd': ('core/tensor.html#_layer_norm_fwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._layer_norm_bwd': ('core/tensor.html#_layer_norm_bwd', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.is_grad_enabled': ('core/tensor.html#is_grad_enabled', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.no_grad': ('core/tensor.html#no_grad', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.TraceRecord': ('core/tensor.html#tracerecord', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor': ('core/tensor.html#tensor', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__init__': ('core/tensor.html#tensor.__init__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.shape': ('core/tensor.html#tensor.shape', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.dtype': ('core/tensor.html#tensor.dtype', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.ndim': ('core/tensor.html#tensor.ndim', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.size': ('core/tensor.html#tensor.size', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.is_leaf': ('core/tensor.html#tensor.is_leaf', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.item': ('core/tensor.html#tensor.item', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.numpy': ('core/tensor.html#tensor.numpy', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.detach': ('core/tensor.html#tensor.detach', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__repr__': ('core/tensor.html#tensor.__repr__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor._lift': ('core/tensor.html#tensor._lift', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__add__': ('core/tensor.html#tensor.__add__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__radd__': ('core/tensor.html#tensor.__radd__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__sub__': ('core/tensor.html#tensor.__sub__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__rsub__': ('core/tensor.html#tensor.__rsub__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__neg__': ('core/tensor.html#tensor.__neg__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__matmul__': ('core/tensor.html#tensor.__matmul__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__mul__': ('core/tensor.html#tensor.__mul__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__truediv__': ('core/tensor.html#tensor.__truediv__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.__getitem__': ('core/tensor.html#tensor.__getitem__', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.exp': ('core/tensor.html#tensor.exp', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.log': ('core/tensor.html#tensor.log', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.sigmoid': ('core/tensor.html#tensor.sigmoid', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.log_sigmoid': ('core/tensor.html#tensor.log_sigmoid', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.relu': ('core/tensor.html#tensor.relu', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.gelu': ('core/tensor.html#tensor.gelu', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.softmax': ('core/tensor.html#tensor.softmax', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.log_softmax': ('core/tensor.html#tensor.log_softmax', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.sum': ('core/tensor.html#tensor.sum', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.mean': ('core/tensor.html#tensor.mean', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.reshape': ('core/tensor.html#tensor.reshape', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.transpose': ('core/tensor.html#tensor.transpose', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Tensor.T': ('core/tensor.html#tensor.t', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.apply_primitive': ('core/tensor.html#apply_primitive', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.concat': ('core/tensor.html#concat', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.embedding': ('core/tensor.html#embedding', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.layer_norm': ('core/tensor.html#layer_norm', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Trace': ('core/tensor.html#trace', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Trace.leaves': ('core/tensor.html#trace.leaves', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.Trace.replay': ('core/tensor.html#trace.replay', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._collect_records': ('core/tensor.html#_collect_records', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.trace_of': ('core/tensor.html#trace_of', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.backward': ('core/tensor.html#backward', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor._as_float': ('core/tensor.html#_as_float', 'cjm_hybrid_alignment/core/tensor.py'),
                'cjm_hybrid_alignment.core.tensor.finite_difference_grad': ('core/tensor.html#finite_difference_grad', 'cjm_hybrid_alignment/core/tensor.py')},
            'cjm_hybrid_alignment.data.records': { 'cjm_hybrid_alignment.data.records._kind': ('data/records.html#_kind', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.iter_jsonl': ('data/records.html#iter_jsonl', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.record_from_dict': ('data/records.html#record_from_dict', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.load_records': ('data/records.html#load_records', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.write_records': ('data/records.html#write_records', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.records_hash': ('data/records.html#records_hash', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.ifa_tokens': ('data/records.html#ifa_tokens', 'cjm_hybrid_alignment/data/records.py'),
                'cjm_hybrid_alignment.data.records.preference_tokens': ('data/records.html#preference_tokens', 'cjm_hybrid_alignment/data/records.py')},
            'cjm_hybrid_alignment.data.synth': { 'cjm_hybrid_alignment.data.synth.apply_task': ('data/synth.html#apply_task', 'cjm_hybrid_alignment/data/synth.py'),
                'cjm_hybrid_alignment.data.synth.corrupt': ('data/synth.html#corrupt', 'cjm_hybrid_alignment/data/synth.py'),
                'cjm_hybrid_alignment.data.synth.random_prompts': ('data/synth.html#random_prompts', 'cjm_hybrid_alignment/data/synth.py'),
                'cjm_hybrid_alignment.data.synth.synth_task_generate': ('data/synth.html#synth_task_generate', 'cjm_hybrid_alignment/data/synth.py')},
            'cjm_hybrid_alignment.data.tokenizer': { 'cjm_hybrid_alignment.data.tokenizer.tokenize': ('data/tokenizer.html#tokenize', 'cjm_hybrid_alignment/data/tokenizer.py'),
                'cjm_hybrid_alignment.data.tokenizer.detokenize': ('data/tokenizer.html#detokenize', 'cjm_hybrid_alignment/data/tokenizer.py'),
                'cjm_hybrid_alignment.data.tokenizer.encode_prompt': ('data/tokenizer.html#encode_prompt', 'cjm_hybrid_alignment/data/tokenizer.py'),
                'cjm_hybrid_alignment.data.tokenizer.encode_response': ('data/tokenizer.html#encode_response', 'cjm_hybrid_alignment/data/tokenizer.py'),
                'cjm_hybrid_alignment.data.tokenizer.decode_response': ('data/tokenizer.html#decode_response', 'cjm_hybrid_alignment/data/tokenizer.py')},
            'cjm_hybrid_alignment.errors': { 'cjm_hybrid_alignment.errors.HbatError': ('errors.html#hbaterror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.ShapeError': ('errors.html#shapeerror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.ShapeError.__init__': ('errors.html#shapeerror.__init__', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.DomainError': ('errors.html#domainerror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.RecordError': ('errors.html#recorderror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.CheckpointError': ('errors.html#checkpointerror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.ConfigError': ('errors.html#configerror', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.NumericAbort': ('errors.html#numericabort', 'cjm_hybrid_alignment/errors.py'),
                'cjm_hybrid_alignment.errors.NumericAbort.__init__': ('errors.html#numericabort.__init__', 'cjm_hybrid_alignment/errors.py')},
            'cjm_hybrid_alignment.evaluation.metrics': { 'cjm_hybrid_alignment.evaluation.metrics.mean_reward': ('evaluation/metrics.html#mean_reward', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.temperature_sweep': ('evaluation/metrics.html#temperature_sweep', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics._ifa_items': ('evaluation/metrics.html#_ifa_items', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics._pref_items': ('evaluation/metrics.html#_pref_items', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.perplexity': ('evaluation/metrics.html#perplexity', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.mean_mle_loss': ('evaluation/metrics.html#mean_mle_loss', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.preference_margin': ('evaluation/metrics.html#preference_margin', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.reward_accuracy': ('evaluation/metrics.html#reward_accuracy', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.win_rate': ('evaluation/metrics.html#win_rate', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.exact_match_judge': ('evaluation/metrics.html#exact_match_judge', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.load_judgments': ('evaluation/metrics.html#load_judgments', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.metrics_frame': ('evaluation/metrics.html#metrics_frame', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics._clean': ('evaluation/metrics.html#_clean', 'cjm_hybrid_alignment/evaluation/metrics.py'),
                'cjm_hybrid_alignment.evaluation.metrics.emit_metrics': ('evaluation/metrics.html#emit_metrics', 'cjm_hybrid_alignment/evaluation/metrics.py')},
            'cjm_hybrid_alignment.models': { 'cjm_hybrid_alignment.models.Side': ('models.html#side', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.LossKind': ('models.html#losskind', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.HpaAlgorithm': ('models.html#hpaalgorithm', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.BaselineMode': ('models.html#baselinemode', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.EwcMode': ('models.html#ewcmode', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.Verdict': ('models.html#verdict', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.ModelConfig': ('models.html#modelconfig', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.ModelConfig.__post_init__': ('models.html#modelconfig.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.GenerationSettings': ('models.html#generationsettings', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.GenerationSettings.__post_init__': ('models.html#generationsettings.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.KLSettings': ('models.html#klsettings', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.KLSettings.__post_init__': ('models.html#klsettings.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.DPOSettings': ('models.html#dposettings', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.DPOSettings.__post_init__': ('models.html#dposettings.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.EWCSettings': ('models.html#ewcsettings', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.EWCSettings.__post_init__': ('models.html#ewcsettings.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.OptimSettings': ('models.html#optimsettings', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.OptimSettings.__post_init__': ('models.html#optimsettings.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.HbatConfig': ('models.html#hbatconfig', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.HbatConfig.__post_init__': ('models.html#hbatconfig.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.HbatConfig.ewc': ('models.html#hbatconfig.ewc', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.DataConfig': ('models.html#dataconfig', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.DataConfig.__post_init__': ('models.html#dataconfig.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.RunConfig': ('models.html#runconfig', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PromptResponseRecord': ('models.html#promptresponserecord', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PromptResponseRecord.__post_init__': ('models.html#promptresponserecord.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PreferenceRecord': ('models.html#preferencerecord', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PreferenceRecord.__post_init__': ('models.html#preferencerecord.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PairwiseJudgment': ('models.html#pairwisejudgment', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.SnapshotLabel': ('models.html#snapshotlabel', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.Phase': ('models.html#phase', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.Phase.phase_id': ('models.html#phase.phase_id', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.AlignmentSchedule': ('models.html#alignmentschedule', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.AlignmentSchedule.__post_init__': ('models.html#alignmentschedule.__post_init__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.AlignmentSchedule.__iter__': ('models.html#alignmentschedule.__iter__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.AlignmentSchedule.__len__': ('models.html#alignmentschedule.__len__', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.AlignmentSchedule.phase_ids': ('models.html#alignmentschedule.phase_ids', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.StepMetric': ('models.html#stepmetric', 'cjm_hybrid_alignment/models.py'),
                'cjm_hybrid_alignment.models.PhaseResult': ('models.html#phaseresult', 'cjm_hybrid_alignment/models.py')},
            'cjm_hybrid_alignment.training.scheduler': { 'cjm_hybrid_alignment.training.scheduler.split_dataset': ('training/scheduler.html#split_dataset', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.build_schedule': ('training/scheduler.html#build_schedule', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.params_from_snapshot': ('training/scheduler.html#params_from_snapshot', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler._check_fits': ('training/scheduler.html#_check_fits', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.tokenize_ifa': ('training/scheduler.html#tokenize_ifa', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.tokenize_preferences': ('training/scheduler.html#tokenize_preferences', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.RunResult': ('training/scheduler.html#runresult', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.validate_policy': ('training/scheduler.html#validate_policy', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler._selection_score': ('training/scheduler.html#_selection_score', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.train_phase': ('training/scheduler.html#train_phase', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler._execute': ('training/scheduler.html#_execute', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler._write_run': ('training/scheduler.html#_write_run', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.run_hbat': ('training/scheduler.html#run_hbat', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.run_two_stage': ('training/scheduler.html#run_two_stage', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.run_hbat_freeze': ('training/scheduler.html#run_hbat_freeze', 'cjm_hybrid_alignment/training/scheduler.py'),
                'cjm_hybrid_alignment.training.scheduler.run_schedule': ('training/scheduler.html#run_schedule', 'cjm_hybrid_alignment/training/scheduler.py')},
            'cjm_hybrid_alignment.training.stages': { 'cjm_hybrid_alignment.training.stages.Penalty': ('training/stages.html#penalty', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.Penalty.__call__': ('training/stages.html#penalty.__call__', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages._with_penalty': ('training/stages.html#_with_penalty', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.run_steps': ('training/stages.html#run_steps', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.train_mle': ('training/stages.html#train_mle', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.train_reward_model': ('training/stages.html#train_reward_model', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.train_dpo': ('training/stages.html#train_dpo', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.standardize': ('training/stages.html#standardize', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.PPOBatch': ('training/stages.html#ppobatch', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.PPOBatch.mean_reward': ('training/stages.html#ppobatch.mean_reward', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.sample_ppo_batch': ('training/stages.html#sample_ppo_batch', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.value_loss': ('training/stages.html#value_loss', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.cold_start_value': ('training/stages.html#cold_start_value', 'cjm_hybrid_alignment/training/stages.py'),
                'cjm_hybrid_alignment.training.stages.train_ppo': ('training/stages.html#train_ppo', 'cjm_hybrid_alignment/training/stages.py')},
            'cjm_hybrid_alignment.utils': { 'cjm_hybrid_alignment.utils.SeedStreams': ('utils.html#seedstreams', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.SeedStreams.__init__': ('utils.html#seedstreams.__init__', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.SeedStreams.seed': ('utils.html#seedstreams.seed', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.SeedStreams.rng': ('utils.html#seedstreams.rng', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.SeedStreams.child': ('utils.html#seedstreams.child', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.derive_seed': ('utils.html#derive_seed', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.sha256_file': ('utils.html#sha256_file', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.sha256_json': ('utils.html#sha256_json', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.atomic_write_bytes': ('utils.html#atomic_write_bytes', 'cjm_hybrid_alignment/utils.py'),
                'cjm_hybrid_alignment.utils.atomic_write_text': ('utils.html#atomic_write_text', 'cjm_hybrid_alignment/utils.py')}}}
